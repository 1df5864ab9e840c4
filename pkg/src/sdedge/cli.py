"""Command-line interface.

Subcommands: detect, noise, denoise, compare, table1. Exit codes are a
stable scripting contract: 0 on success, 1 for usage/argument errors,
2 for I/O or file-format errors. All floating-point output uses 4
decimal places.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .detectors import DetectorConfig
from .evaluate import CSV_COLUMNS, montage, reference_window_report, score
from .filters import median_filter
from .image import gray_to_mask, mask_to_gray
from .io import ImageFormatError, load_image, save_image
from .noise import NoiseSpec, add_salt_pepper

__all__ = ["main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on bad flags; we need 1."""

    def error(self, message):
        raise _UsageError(message)


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _odd_kernel(text: str) -> int:
    value = int(text)
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"kernel size must be odd and >= 3, got {value}")
    return value


def _unit_fraction(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {value}")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="sdedge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    detect = sub.add_parser("detect", help="run one detector and write its edge map as PGM")
    detect.add_argument("--in", dest="input", required=True, help="input image (PGM or PNG)")
    detect.add_argument("--out", dest="output", required=True, help="output edge map (PGM)")
    detect.add_argument(
        "--detector", choices=("stddev", "sobel", "canny"), default="stddev"
    )
    detect.add_argument("--tau", type=_positive_float, default=7.0,
                        help="dispersion threshold for stddev (default 7, useful band 4..9)")
    detect.add_argument("--median", type=_odd_kernel, default=3, metavar="K",
                        help="median pre-filter kernel for stddev (default 3)")
    detect.add_argument("--no-median", action="store_true",
                        help="disable the median pre-filter")
    detect.add_argument("--threshold", type=float, default=None,
                        help="gradient magnitude threshold (required for sobel)")
    detect.add_argument("--sigma", type=_positive_float, default=1.0,
                        help="Gaussian sigma for canny (default 1.0)")
    detect.add_argument("--low", type=float, default=None, help="canny low threshold")
    detect.add_argument("--high", type=float, default=None, help="canny high threshold")

    noise = sub.add_parser("noise", help="add seeded salt-and-pepper noise")
    noise.add_argument("--in", dest="input", required=True)
    noise.add_argument("--out", dest="output", required=True)
    noise.add_argument("--density", type=_unit_fraction, default=0.10)
    noise.add_argument("--salt-ratio", type=_unit_fraction, default=0.5)
    noise.add_argument("--seed", type=int, default=0)

    denoise = sub.add_parser("denoise", help="median-filter an image")
    denoise.add_argument("--in", dest="input", required=True)
    denoise.add_argument("--out", dest="output", required=True)
    denoise.add_argument("--k", type=_odd_kernel, default=3)

    compare = sub.add_parser(
        "compare",
        help="run all three detectors, write a 4-panel montage, optionally score vs truth",
    )
    compare.add_argument("--in", dest="input", required=True)
    compare.add_argument("--out", dest="output", required=True, help="montage output image")
    compare.add_argument("--truth", default=None,
                         help="ground-truth edge map (nonzero = edge); enables CSV scoring")
    compare.add_argument("--csv", default=None,
                         help="CSV report path (default: print rows to stdout)")
    compare.add_argument("--radius", type=int, default=1,
                         help="Chebyshev match tolerance in pixels (default 1)")
    compare.add_argument("--tau", type=_positive_float, default=7.0)
    compare.add_argument("--median", type=_odd_kernel, default=3, metavar="K")
    compare.add_argument("--no-median", action="store_true")
    compare.add_argument("--sobel-threshold", type=float, required=True)
    compare.add_argument("--sigma", type=_positive_float, default=1.0)
    compare.add_argument("--canny-low", type=float, required=True)
    compare.add_argument("--canny-high", type=float, required=True)
    compare.add_argument("--labels", action="store_true",
                         help="stamp panel names into the montage")

    table1 = sub.add_parser(
        "table1",
        help="recompute the built-in 10x10 reference grid's window dispersions "
        "and PASS/FAIL each against its expected value",
    )
    table1.add_argument("--tau", type=_positive_float, default=7.0)

    return parser


def _load(path: str):
    return load_image(path)


def _cmd_detect(args) -> int:
    img = _load(args.input)
    config = _make_detector_config(args)
    mask = config.run(img)
    save_image(mask_to_gray(mask), args.output)
    print(f"{config.describe()} edges={int(mask.sum())} wrote={args.output}")
    return 0


def _make_detector_config(args) -> DetectorConfig:
    if args.detector == "sobel":
        if args.threshold is None:
            raise _UsageError("sobel requires an explicit --threshold")
        if args.threshold < 0:
            raise _UsageError(f"--threshold must be >= 0, got {args.threshold}")
        return DetectorConfig(detector="sobel", sobel_threshold=args.threshold)
    if args.detector == "canny":
        if args.low is None or args.high is None:
            raise _UsageError("canny requires explicit --low and --high")
        if not args.low < args.high:
            raise _UsageError(f"--low must be below --high, got {args.low} >= {args.high}")
        return DetectorConfig(
            detector="canny", canny_sigma=args.sigma, canny_low=args.low, canny_high=args.high
        )
    return DetectorConfig(
        detector="stddev", tau=args.tau, pre_median=not args.no_median, median_k=args.median
    )


def _cmd_noise(args) -> int:
    img = _load(args.input)
    spec = NoiseSpec(density=args.density, salt_ratio=args.salt_ratio, seed=args.seed)
    noisy = add_salt_pepper(img, spec)
    save_image(noisy, args.output)
    changed = int((noisy != img).sum())
    print(
        f"noise density={spec.density:.4f} salt_ratio={spec.salt_ratio:.4f} "
        f"seed={spec.seed} changed={changed} wrote={args.output}"
    )
    return 0


def _cmd_denoise(args) -> int:
    img = _load(args.input)
    save_image(median_filter(img, args.k), args.output)
    print(f"denoise k={args.k} wrote={args.output}")
    return 0


def _cmd_compare(args) -> int:
    if args.radius < 0:
        raise _UsageError(f"--radius must be >= 0, got {args.radius}")
    img = _load(args.input)
    configs = [
        DetectorConfig(detector="sobel", sobel_threshold=args.sobel_threshold),
        DetectorConfig(
            detector="canny",
            canny_sigma=args.sigma,
            canny_low=args.canny_low,
            canny_high=args.canny_high,
        ),
        DetectorConfig(
            detector="stddev", tau=args.tau, pre_median=not args.no_median, median_k=args.median
        ),
    ]
    masks = [config.run(img) for config in configs]
    panels = [img] + [mask_to_gray(mask) for mask in masks]
    labels = ["INPUT", "SOBEL", "CANNY", "STDDEV"] if args.labels else None
    save_image(montage(panels, labels=labels), args.output)
    print(f"montage wrote={args.output}")
    for config, mask in zip(configs, masks):
        print(f"{config.describe()} edges={int(mask.sum())}")

    if args.truth is None:
        return 0
    truth = gray_to_mask(_load(args.truth))
    rows = [",".join(CSV_COLUMNS)]
    for config, mask in zip(configs, masks):
        report = score(mask, truth, tolerance_radius=args.radius, config=config)
        rows.append(report.csv_row())
    csv_text = "\n".join(rows) + "\n"
    if args.csv is None:
        sys.stdout.write(csv_text)
    else:
        Path(args.csv).write_text(csv_text)
        print(f"csv wrote={args.csv}")
    return 0


def _cmd_table1(args) -> int:
    rows = reference_window_report(tau=args.tau)
    passed = 0
    for row in rows:
        status = "PASS" if row.ok else "FAIL"
        passed += row.ok
        print(
            f"origin=({row.origin[0]},{row.origin[1]}) upper_left={row.upper_left:3d} "
            f"std={row.std:.4f} expected={row.expected:.4f} "
            f"edge={'yes' if row.is_edge else 'no'} {status}"
        )
    print(f"{passed}/{len(rows)} PASS (tolerance {5e-4:.4f}, tau {args.tau:.4f})")
    return 0 if passed == len(rows) else 1


_COMMANDS = {
    "detect": _cmd_detect,
    "noise": _cmd_noise,
    "denoise": _cmd_denoise,
    "compare": _cmd_compare,
    "table1": _cmd_table1,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except ImageFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # library-level argument validation (bad sizes, thresholds, ...)
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
