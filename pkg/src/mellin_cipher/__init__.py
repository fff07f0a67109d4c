"""Factorial coefficient cipher toolkit.

A toy cipher that encodes letters as polynomial coefficients, scales each
by the factorial of a scheduled exponent keyed on a secret parameter s, and
splits the result by division by 26 into a ciphertext letter and a quotient
that becomes part of the private key. Ships with a quadrature oracle that
verifies the integral identities the construction relies on, a bit-exact
key file format, and a key-recovery scan demonstrating that the quotients
leak s. Not secure; see README.
"""

from .alphabet import char_to_value, decode_values, encode_text, value_to_char
from .cipher import (
    CipherKey,
    CipherText,
    decrypt,
    encrypt,
    exponent_schedule,
    factorial,
    recover_s,
    split_mod26,
    transform_coefficients,
)
from .keyio import read_ciphertext, read_key, write_ciphertext, write_key
from .oracle import (
    OracleResult,
    gamma_identity_check,
    numeric_mellin,
    scaling_check,
    shift_check,
)

__version__ = "0.1.0"

__all__ = [
    "CipherKey",
    "CipherText",
    "OracleResult",
    "char_to_value",
    "decode_values",
    "decrypt",
    "encode_text",
    "encrypt",
    "exponent_schedule",
    "factorial",
    "gamma_identity_check",
    "numeric_mellin",
    "read_ciphertext",
    "read_key",
    "recover_s",
    "scaling_check",
    "shift_check",
    "split_mod26",
    "transform_coefficients",
    "value_to_char",
    "write_ciphertext",
    "write_key",
]
