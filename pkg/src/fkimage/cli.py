"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data/file error, 3 verification
failure.  Angles are radians and accept simple pi expressions such as
``pi``, ``-pi/6``, ``3pi/4`` or ``2*pi/3``; screen shapes are given as
``--shape JX,JY`` with integer, decimal half-integer (``2.5``) or
fractional (``5/2``) spins per axis.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from fractions import Fraction

from . import __version__
from . import fourier_transforms as ft
from .errors import FkimageError, FormatError
from .figures import mode_gallery, regenerate_all
from .group_algebra import (FourierGroupElement, compose, element_from_json,
                            element_to_json, inverse)
from .imageio import load_image, save_complex
from .mode_basis import ScreenShape, build_basis
from .render import RenderSpec, render
from .verify import DEFAULT_SHAPES, run_verification

_ANGLE_RE = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?P<coef>\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*"
    r"(?P<pi>pi)?\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$")


class UsageError(Exception):
    pass


def parse_angle(text: str) -> float:
    """Parse a radian value, optionally as a multiple or fraction of pi."""
    match = _ANGLE_RE.match(str(text).lower())
    if not match or (match.group("coef") is None and match.group("pi") is None):
        raise UsageError(f"cannot parse angle {text!r}")
    value = float(match.group("coef")) if match.group("coef") else 1.0
    if match.group("pi"):
        value *= math.pi
    if match.group("den"):
        den = float(match.group("den"))
        if den == 0:
            raise UsageError(f"zero denominator in angle {text!r}")
        value /= den
    return -value if match.group("sign") == "-" else value


def parse_shape(text: str) -> ScreenShape:
    parts = str(text).split(",")
    if len(parts) != 2:
        raise UsageError(f"shape must be 'JX,JY', got {text!r}")
    spins = []
    for part in parts:
        try:
            doubled = 2 * Fraction(part.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad spin {part!r} in shape {text!r}") from None
        if doubled.denominator != 1 or doubled < 0:
            raise UsageError(
                f"spin {part!r} must be a non-negative integer or half-integer")
        spins.append(int(doubled))
    from .special_functions import Spin
    return ScreenShape(Spin(spins[0]), Spin(spins[1]))


def _element_arg(text: str) -> FourierGroupElement:
    if text.startswith("@"):
        try:
            with open(text[1:], "r") as fh:
                text = fh.read()
        except OSError as exc:
            raise FormatError(f"cannot read element file: {exc}") from exc
    return element_from_json(text)


def _write_output(pixels, path, args):
    if path.lower().endswith(".pgm"):
        spec = RenderSpec(scaling=args.scaling, depth=args.depth,
                          channel=args.channel)
        render(pixels, spec, path)
    else:
        save_complex(path, pixels)


def _transform_command(args, action):
    _, pixels = load_image(args.input)
    basis = build_basis(ScreenShape.from_pixels(*pixels.shape))
    out = action(basis, pixels)
    _write_output(out, args.output, args)
    print(f"wrote {args.output}")
    return 0


def _add_io_options(sub):
    sub.add_argument("--in", dest="input", required=True, help="input image "
                     "(PGM or .fkimg complex array)")
    sub.add_argument("--out", dest="output", required=True, help="output file; "
                     ".pgm renders, anything else stores the complex array")
    sub.add_argument("--channel", default="real",
                     choices=("real", "imag", "abs", "phase"),
                     help="channel for PGM output")
    sub.add_argument("--scaling", default="adaptive",
                     choices=("fixed", "adaptive"), help="gray scaling for PGM")
    sub.add_argument("--depth", type=int, default=8, choices=(8, 16),
                     help="PGM bit depth")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="fkimage",
                     description="Unitary Fourier-group transforms of images "
                                 "on finite rectangular screens.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("modes", help="render the mode galleries of a screen")
    p.add_argument("--shape", required=True, help="spins 'JX,JY'")
    p.add_argument("--out", default="modes_out", help="output directory")
    p.add_argument("--lk", action="store_true",
                   help="render the Laguerre-Kravchuk gallery instead of the "
                        "Cartesian one")
    p.add_argument("--depth", type=int, default=8, choices=(8, 16))

    p = subs.add_parser("rotate", help="rotate an image")
    p.add_argument("--theta", required=True, help="rotation angle (radians)")
    _add_io_options(p)

    p = subs.add_parser("gyrate", help="gyrate an image")
    p.add_argument("--gamma", required=True, help="gyration angle (radians)")
    _add_io_options(p)

    p = subs.add_parser("fourier", help="fractional Fourier transform")
    p.add_argument("--chi", default="0", help="symmetric angle (radians)")
    p.add_argument("--beta", default="0", help="antisymmetric angle (radians)")
    _add_io_options(p)

    p = subs.add_parser("apply", help="apply a general group element")
    p.add_argument("--element", required=True,
                   help='JSON {"chi":..,"psi":..,"theta":..,"phi":..} or @file')
    _add_io_options(p)

    p = subs.add_parser("compose", help="compose two group elements (b first)")
    p.add_argument("--a", required=True, help="element JSON or @file")
    p.add_argument("--b", required=True, help="element JSON or @file")

    p = subs.add_parser("invert", help="invert a group element")
    p.add_argument("--element", required=True, help="element JSON or @file")

    p = subs.add_parser("verify", help="run the full invariant suite")
    p.add_argument("--tolerance", type=float, default=None,
                   help="override every check tolerance")
    p.add_argument("--shape", action="append", default=None,
                   help="screen shape 'JX,JY' (repeatable; default "
                        "5,3 / 11,7 / 20,12)")
    p.add_argument("--images", type=int, default=20,
                   help="random images per randomized check")
    p.add_argument("--seed", type=int, default=2024)

    p = subs.add_parser("figures", help="regenerate the figure galleries")
    p.add_argument("--out", default="figures_out", help="output directory")

    return parser


def _run(args) -> int:
    if args.command == "modes":
        shape = parse_shape(args.shape)
        basis = build_basis(shape)
        manifest = mode_gallery(basis, args.out,
                                kind="lk" if args.lk else "cartesian",
                                depth=args.depth)
        print(f"{manifest['count']} modes -> {args.out} "
              f"(sheet: {manifest['sheet']})")
        return 0

    if args.command == "rotate":
        theta = parse_angle(args.theta)
        return _transform_command(
            args, lambda basis, pix: ft.rotate_image(basis, pix, theta))

    if args.command == "gyrate":
        gamma = parse_angle(args.gamma)
        return _transform_command(
            args, lambda basis, pix: ft.gyrate_image(basis, pix, gamma))

    if args.command == "fourier":
        chi = parse_angle(args.chi)
        beta = parse_angle(args.beta)
        return _transform_command(
            args,
            lambda basis, pix: ft.fractional_fourier_image(basis, pix, chi, beta))

    if args.command == "apply":
        element = _element_arg(args.element)
        return _transform_command(
            args, lambda basis, pix: ft.apply_element(basis, pix, element))

    if args.command == "compose":
        result = compose(_element_arg(args.a), _element_arg(args.b))
        print(element_to_json(result))
        return 0

    if args.command == "invert":
        print(element_to_json(inverse(_element_arg(args.element))))
        return 0

    if args.command == "verify":
        shapes = DEFAULT_SHAPES
        if args.shape:
            shapes = tuple(
                (s.j_x.j, s.j_y.j)
                for s in (parse_shape(t) for t in args.shape))
        results = run_verification(shapes=shapes, tolerance=args.tolerance,
                                   images=args.images, seed=args.seed)
        width = max(len(r.name) for r in results)
        failed = []
        for r in results:
            status = "pass" if r.passed else "FAIL"
            note = "  [known limitation]" if (not r.passed
                                              and r.known_limitation) else ""
            print(f"{r.name:<{width}}  {status}  {r.detail}{note}")
            if not r.passed:
                failed.append(r)
        unexpected = [r for r in failed if not r.known_limitation]
        print(f"\n{len(results) - len(failed)}/{len(results)} checks passed"
              + (f"; {len(failed) - len(unexpected)} known limitation(s)"
                 if len(failed) > len(unexpected) else ""))
        if unexpected:
            print(f"{len(unexpected)} unexpected failure(s)")
        return 3 if failed else 0

    if args.command == "figures":
        manifest = regenerate_all(args.out)
        total = sum(m.get("count", len(m.get("files", [])))
                    for m in manifest.values())
        print(f"figures written to {args.out} ({total} images)")
        return 0

    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FormatError, FileNotFoundError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except FkimageError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
