"""Deterministic text rendering shared by the algebra layers.

Every layer renders as a flat signed sum of products so output is stable,
diff-friendly, and parseable by the expression grammar.
"""


def format_power(symbol: str, k: int) -> str:
    return symbol if k == 1 else f"{symbol}^{k}"


def signed_product(coeff: int, symbol_factors: list) -> tuple:
    """One flat term as (negative, body); unit coefficients are left implicit."""
    factors = []
    if abs(coeff) != 1 or not symbol_factors:
        factors.append(str(abs(coeff)))
    factors.extend(symbol_factors)
    return (coeff < 0, " * ".join(factors))


def join_signed(parts: list) -> str:
    """Join (negative, body) pairs into "a - b + c"; empty input renders as 0."""
    if not parts:
        return "0"
    neg, body = parts[0]
    out = [("-" if neg else "") + body]
    for neg, body in parts[1:]:
        out.append((" - " if neg else " + ") + body)
    return "".join(out)
