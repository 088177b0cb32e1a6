"""The composite ASH digest: creation, verification, pairing, encoding.

Serialized layout, sizes in bytes for ASH-1 / ASH-2:

    offset 0        static section   32 / 64    base hash of the restructured stream
    offset 32 / 64  dynamic section  32 / 64    base hash of the stream XOR pepper
    offset 64 / 128 pepper           64 / 128   embedded so verifiers can recompute

Total 128 bytes (1024 bits) for ASH-1, 256 bytes (2048 bits) for ASH-2.

The static section is the same for a message no matter the pepper; the
dynamic section binds the digest to one pepper value. Creation draws a
fresh random pepper; verification must reuse the pepper embedded in the
digest it is checking, which is why the two modes are separate.
"""

from __future__ import annotations

import hmac
import os
from dataclasses import dataclass
from typing import Callable

from .errors import DigestFormatError, SizeMismatchError
from .restructure import restructure
from .seasoning import apply_pepper, generate_pepper
from .variants import ASH1, ASH2, AshVariant

_FORMS = ("binary", "hex", "tagged")


@dataclass(frozen=True)
class AshDigest:
    """One composite digest; construction enforces the section sizes."""

    variant: AshVariant
    static_section: bytes
    dynamic_section: bytes
    pepper: bytes

    def __post_init__(self) -> None:
        v = self.variant
        if len(self.static_section) != v.section_size:
            raise SizeMismatchError(
                f"static section is {len(self.static_section)} bytes, wanted {v.section_size}"
            )
        if len(self.dynamic_section) != v.section_size:
            raise SizeMismatchError(
                f"dynamic section is {len(self.dynamic_section)} bytes, wanted {v.section_size}"
            )
        if len(self.pepper) != v.pepper_size:
            raise SizeMismatchError(
                f"pepper is {len(self.pepper)} bytes, wanted {v.pepper_size}"
            )


def create(
    message: bytes,
    variant: AshVariant = ASH1,
    pepper: bytes | None = None,
    rng: Callable[[int], bytes] = os.urandom,
) -> AshDigest:
    """Hash a message, drawing a fresh random pepper unless one is supplied."""
    if pepper is None:
        pepper = generate_pepper(variant, rng)
    elif len(pepper) != variant.pepper_size:
        raise SizeMismatchError(
            f"pepper is {len(pepper)} bytes, wanted {variant.pepper_size}"
        )
    stream = restructure(message, variant)
    static = variant.base.compute(stream)
    dynamic = variant.base.compute(apply_pepper(stream, pepper))
    return AshDigest(variant, static, dynamic, pepper)


def dynamic_section(message: bytes, variant: AshVariant, pepper: bytes) -> bytes:
    """Just the pepper-bound section, for protocols that exchange it alone."""
    if len(pepper) != variant.pepper_size:
        raise SizeMismatchError(
            f"pepper is {len(pepper)} bytes, wanted {variant.pepper_size}"
        )
    return variant.base.compute(apply_pepper(restructure(message, variant), pepper))


def sections_match(computed: AshDigest, claimed: AshDigest) -> bool:
    """Constant-time comparison of both sections (pepper travels in clear)."""
    ok_static = hmac.compare_digest(computed.static_section, claimed.static_section)
    ok_dynamic = hmac.compare_digest(computed.dynamic_section, claimed.dynamic_section)
    return ok_static and ok_dynamic


def verify(message: bytes, claimed: AshDigest) -> bool:
    """Recompute with the embedded pepper; both sections must match."""
    recomputed = create(message, claimed.variant, claimed.pepper)
    return sections_match(recomputed, claimed)


def create_pair(
    message: bytes,
    variant: AshVariant = ASH1,
    rng: Callable[[int], bytes] = os.urandom,
) -> tuple[AshDigest, AshDigest]:
    """A public digest and a second one to store somewhere safe.

    Same static section, independent peppers. Keeping the second digest
    private lets the holder authenticate future copies of the message even
    if the published digest is ever matched by forged data, since matching
    data cannot be pre-created without knowing the private pepper.
    """
    return create(message, variant, rng=rng), create(message, variant, rng=rng)


def encode(digest: AshDigest, form: str = "tagged") -> bytes | str:
    """Serialize a digest.

    binary: static || dynamic || pepper, exactly ``total_size`` bytes.
    hex: lowercase hex of binary (256 chars for ASH-1, 512 for ASH-2).
    tagged: "ash1:" or "ash2:" prefix plus the hex form.
    """
    if form not in _FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {_FORMS}")
    raw = digest.static_section + digest.dynamic_section + digest.pepper
    if form == "binary":
        return raw
    if form == "hex":
        return raw.hex()
    return f"{digest.variant.tag}:{raw.hex()}"


def _from_binary(raw: bytes, variant: AshVariant) -> AshDigest:
    s = variant.section_size
    return AshDigest(variant, raw[:s], raw[s : 2 * s], raw[2 * s :])


def decode(encoded: bytes | str) -> AshDigest:
    """Parse any of the three encodings, inferring the variant.

    Raw bytes of exactly 128 or 256 are binary ASH-1 / ASH-2; other bytes
    inputs are treated as ASCII text. Text with a "tag:" prefix names its
    variant; bare hex is sized 256 or 512 characters.
    """
    if isinstance(encoded, (bytes, bytearray)):
        raw = bytes(encoded)
        for variant in (ASH1, ASH2):
            if len(raw) == variant.total_size:
                return _from_binary(raw, variant)
        try:
            text = raw.decode("ascii")
        except UnicodeDecodeError:
            raise DigestFormatError(
                f"bad length: {len(raw)} bytes is not a binary digest size (128 or 256)"
            ) from None
    else:
        text = encoded
    text = text.strip()

    if ":" in text:
        tag, _, hexpart = text.partition(":")
        variant = {v.tag: v for v in (ASH1, ASH2)}.get(tag.lower())
        if variant is None:
            raise DigestFormatError(f"unknown tag {tag!r}")
    else:
        hexpart = text
        by_hex_len = {2 * v.total_size: v for v in (ASH1, ASH2)}
        variant = by_hex_len.get(len(hexpart))
        if variant is None:
            raise DigestFormatError(
                f"bad length: {len(hexpart)} hex characters is not a digest size (256 or 512)"
            )
    if len(hexpart) != 2 * variant.total_size:
        raise DigestFormatError(
            f"bad length: {variant.name} needs {2 * variant.total_size} hex characters, "
            f"got {len(hexpart)}"
        )
    try:
        raw = bytes.fromhex(hexpart)
    except ValueError:
        raise DigestFormatError("bad hex: digest contains non-hexadecimal characters") from None
    return _from_binary(raw, variant)
