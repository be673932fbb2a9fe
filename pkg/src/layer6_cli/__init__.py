"""Layer 6: CLI - expression language, subcommands and canonical JSON output."""

from .expressions import (
    Token,
    tokenize,
    RationalLiteral,
    PointLiteral,
    VectorLiteral,
    Negate,
    BinaryOp,
    Expression,
    parse_form,
    evaluate,
    evaluate_text,
)

__all__ = [
    "Token",
    "tokenize",
    "RationalLiteral",
    "PointLiteral",
    "VectorLiteral",
    "Negate",
    "BinaryOp",
    "Expression",
    "parse_form",
    "evaluate",
    "evaluate_text",
]
