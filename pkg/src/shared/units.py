"""Exact integer arithmetic for wei, ETH and USD amounts.

No floating point: fees are integer wei, exchange rates are integer
micro-USD per ETH, and every rounding step is an explicit half-up division.
"""
from __future__ import annotations

from decimal import Decimal, localcontext

WEI_PER_ETH = 10**18
MICRO = 10**6

# A wei amount is a plain non-negative int; this alias documents intent.
WeiAmount = int


def require_wei(value: int) -> WeiAmount:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"wei amount must be a non-negative integer, got {value!r}")
    return value


def div_half_up(numerator: int, denominator: int) -> int:
    """Integer division rounding half away from zero (inputs non-negative)."""
    if denominator <= 0:
        raise ValueError("denominator must be positive")
    q, r = divmod(numerator, denominator)
    if 2 * r >= denominator:
        q += 1
    return q


def format_fixed(value: int, places: int) -> str:
    """Render an integer scaled by 10**places as a fixed-point string.

    >>> format_fixed(315592, 6)
    '0.315592'
    """
    if places == 0:
        return str(value)
    sign = "-" if value < 0 else ""
    whole, frac = divmod(abs(value), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def format_eth(wei: int) -> str:
    """Exact ETH rendering without trailing zeros (0.000106384, 0)."""
    whole, frac = divmod(require_wei(wei), WEI_PER_ETH)
    digits = f"{frac:018d}".rstrip("0")
    return f"{whole}.{digits}" if digits else str(whole)


def parse_eth(text: str) -> WeiAmount:
    """Parse a decimal or scientific ETH string ("4.3758E-05") into wei."""
    try:
        d = Decimal(text.strip())
    except ArithmeticError:
        raise ValueError(f"not an ETH amount: {text!r}") from None
    if not d.is_finite():
        raise ValueError(f"not an ETH amount: {text!r}")
    with localcontext() as ctx:
        ctx.prec = max(ctx.prec, len(d.as_tuple().digits) + 19)
        wei = d.scaleb(18)
    if wei != wei.to_integral_value() or wei < 0:
        raise ValueError(f"ETH amount not representable in wei: {text!r}")
    return int(wei)


def usd_micro(fee_wei: int, eth_usd_rate_micro: int) -> int:
    """fee_wei × rate / 10**18 in micro-USD, rounded half-up."""
    return div_half_up(fee_wei * eth_usd_rate_micro, WEI_PER_ETH)


def usd_scaled(fee_wei: int, eth_usd_rate_micro: int, places: int) -> int:
    """USD value scaled by 10**places, rounded once from the exact product."""
    return div_half_up(fee_wei * eth_usd_rate_micro * 10**places, WEI_PER_ETH * MICRO)


def usd_display(fee_wei: int, eth_usd_rate_micro: int, places: int = 2) -> str:
    return format_fixed(usd_scaled(fee_wei, eth_usd_rate_micro, places), places)
