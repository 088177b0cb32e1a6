"""Command-line front end.

Standard output carries only digests and protocol frames; anything meant
for a human goes to standard error, so the tool can sit in a pipeline.
Exit codes: 0 success/match/accept, 1 mismatch/reject, 2 usage, format,
I/O, or protocol errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import BinaryIO

from . import digest as digestmod
from . import files, protocol
from .errors import AshError, DigestFormatError
from .seasoning import combine_shares, generate_pepper
from .variants import AshVariant, get_variant


def _open_input(path: str, memory_budget: int) -> BinaryIO:
    if path == "-":
        return files.spool_to_seekable(sys.stdin.buffer, memory_budget)
    stream = open(path, "rb")
    if stream.seekable():
        return stream
    try:
        return files.spool_to_seekable(stream, memory_budget)
    finally:
        stream.close()


def _parse_pepper(hex_text: str, variant: AshVariant) -> bytes:
    try:
        pepper = bytes.fromhex(hex_text)
    except ValueError:
        raise AshError("--pepper is not valid hex") from None
    if len(pepper) != variant.pepper_size:
        raise AshError(
            f"--pepper must be {variant.pepper_size} bytes "
            f"({2 * variant.pepper_size} hex chars) for {variant.name}, got {len(pepper)}"
        )
    return pepper


def _cmd_hash(args: argparse.Namespace) -> int:
    variant = get_variant(args.variant)
    pepper = _parse_pepper(args.pepper, variant) if args.pepper else None
    with _open_input(args.path, args.memory_budget) as stream:
        result = files.digest_stream(stream, variant, pepper)
    encoded = digestmod.encode(result, args.format)
    if args.format == "binary":
        sys.stdout.buffer.write(encoded)
        sys.stdout.buffer.flush()
    else:
        print(encoded)
    return 0


def _read_digest_argument(argument: str) -> digestmod.AshDigest:
    if argument.startswith("@"):
        with open(argument[1:], "rb") as handle:
            return digestmod.decode(handle.read())
    return digestmod.decode(argument)


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        claimed = _read_digest_argument(args.digest)
    except DigestFormatError as exc:
        print(f"ash: malformed digest: {exc}", file=sys.stderr)
        return 2
    with _open_input(args.path, args.memory_budget) as stream:
        recomputed = files.digest_stream(stream, claimed.variant, claimed.pepper)
    if digestmod.sections_match(recomputed, claimed):
        print("ash: match", file=sys.stderr)
        return 0
    print("ash: mismatch", file=sys.stderr)
    return 1


def _cmd_pepper(args: argparse.Namespace) -> int:
    variant = get_variant(args.variant)
    if args.action == "gen":
        print(generate_pepper(variant).hex())
        return 0
    lines = [line.strip() for line in sys.stdin if line.strip()]
    if not lines:
        print("ash: no shares on standard input", file=sys.stderr)
        return 2
    try:
        shares = [bytes.fromhex(line) for line in lines]
    except ValueError:
        print("ash: share lines must be hex", file=sys.stderr)
        return 2
    print(combine_shares(shares).hex())
    return 0


def _cmd_challenge(args: argparse.Namespace) -> int:
    variant = get_variant(args.variant)
    with open(args.file, "rb") as handle:
        message = handle.read()
    stdin, stdout = sys.stdin.buffer, sys.stdout.buffer

    if args.role == "challenger":
        session = protocol.Challenger(variant)
        protocol.write_frame(stdout, session.issue())
        response = protocol.read_frame(stdin)
        if response is None:
            print("ash: peer closed the stream before responding", file=sys.stderr)
            return 2
        verdict = session.check(response, message)
        protocol.write_frame(stdout, verdict)
        print("ash: accept" if session.accepted else "ash: reject", file=sys.stderr)
        return 0 if session.accepted else 1

    session = protocol.Responder(variant)
    challenge = protocol.read_frame(stdin)
    if challenge is None:
        print("ash: peer closed the stream before challenging", file=sys.stderr)
        return 2
    protocol.write_frame(stdout, session.answer(challenge, message))
    verdict = protocol.read_frame(stdin)
    if verdict is None:
        print("ash: peer closed the stream before the verdict", file=sys.stderr)
        return 2
    accepted = protocol.verdict_accepted(verdict)
    print("ash: accepted" if accepted else "ash: rejected", file=sys.stderr)
    return 0 if accepted else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ash",
        description="Seasoned hashing: restructured, peppered digests over SHA-2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--variant", choices=("ash1", "ash2"), default="ash1")

    p_hash = sub.add_parser("hash", help="hash a file (or - for standard input)")
    add_common(p_hash)
    p_hash.add_argument("--pepper", metavar="HEX", help="fixed pepper instead of a random one")
    p_hash.add_argument("--format", choices=("binary", "hex", "tagged"), default="tagged")
    p_hash.add_argument(
        "--memory-budget",
        type=int,
        default=files.DEFAULT_MEMORY_BUDGET,
        metavar="BYTES",
        help="in-memory limit for non-seekable input before spilling to disk",
    )
    p_hash.add_argument("path", nargs="?", default="-")
    p_hash.set_defaults(func=_cmd_hash)

    p_verify = sub.add_parser("verify", help="verify a file against a digest")
    p_verify.add_argument("digest", help="encoded digest, or @path to read it from a file")
    p_verify.add_argument("path", nargs="?", default="-")
    p_verify.add_argument(
        "--memory-budget", type=int, default=files.DEFAULT_MEMORY_BUDGET, metavar="BYTES"
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_pepper = sub.add_parser("pepper", help="generate or combine pepper material")
    p_pepper.add_argument("action", choices=("gen", "combine"))
    add_common(p_pepper)
    p_pepper.set_defaults(func=_cmd_pepper)

    p_chal = sub.add_parser(
        "challenge", help="run one challenge-response session over standard streams"
    )
    p_chal.add_argument("--role", choices=("challenger", "responder"), required=True)
    add_common(p_chal)
    p_chal.add_argument("file", help="local copy of the data being proven")
    p_chal.set_defaults(func=_cmd_challenge)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AshError as exc:
        print(f"ash: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ash: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
