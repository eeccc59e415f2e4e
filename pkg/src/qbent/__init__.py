"""Exact analysis and construction of q-ary bent and plateaued functions."""
from .cyclotomic import CycInt, cyc_root
from .functions import QFunc, parse_qfunc, serialize_qfunc, hamming_distance, is_balanced
from .spectrum import WalshSpectrum, walsh_transform, classify

__version__ = "0.1.0"
