"""Exact symbolic toolkit for twisted Jacquet modules of principal series of GL_2n."""

from .core_arith import CharLabel, FormalCharacter, HalfInt, nu
from .segments import Multisegment, Segment, seg
from .zelevinsky import mw_dual
from .reps import CharRep, LRep, Product, SteinbergRep, ZRep, one, st
from .parse import parse_expr, parse_multisegment, parse_segment
from .jacquet import analyze_L_family, analyze_preset, analyze_steinberg_char, tjm_filtration, tjm_product
from .lfun import conjecture_check, langlands_param, pole_profile

__version__ = "0.1.0"

__all__ = ["CharLabel", "FormalCharacter", "HalfInt", "nu", "Multisegment", "Segment", "seg", "mw_dual",
           "CharRep", "LRep", "Product", "SteinbergRep", "ZRep", "one", "st", "parse_expr",
           "parse_multisegment", "parse_segment", "analyze_L_family", "analyze_preset",
           "analyze_steinberg_char", "tjm_filtration", "tjm_product", "conjecture_check",
           "langlands_param", "pole_profile"]
