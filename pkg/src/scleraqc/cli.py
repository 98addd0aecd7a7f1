"""Command-line interface.

Subcommands: segment, stats, saturate, sweep, assess, validate-landmarks.
All diagnostics go to stderr; data goes to files or stdout.  Exit codes:
0 success, 1 at least one input failed (the batch still ran to the end),
2 usage error.  Batch items run concurrently up to --jobs, but summary
lines are always emitted sorted by input path, so output is
deterministic regardless of scheduling.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from .color import adjust_saturation, saturation_sweep
from .errors import ScleraQcError
from .image_io import load_image, save_png
from .landmarks import EyeSide, parse_landmarks, validate_against_image
from .report import QualityThresholds, assess, serialize_report
from .segmentation import mask_to_image, render_overlay, segment_both
from .stats import export_histogram_csv, region_stats, polygon_region_stats
from .geometry import convex_hull

THRESHOLDS_ENV_VAR = "SCLERA_QC_THRESHOLDS"


@dataclass
class ItemResult:
    input_path: str
    ok: bool
    message: str


def _read_landmarks(path: str):
    return parse_landmarks(Path(path).read_bytes())


def _check_no_overwrite(inputs: list[str], outputs: list[Path]) -> None:
    resolved_inputs = {Path(p).resolve() for p in inputs}
    for out in outputs:
        if out.resolve() in resolved_inputs:
            raise ScleraQcError(f"refusing to overwrite input file {out}")


def _run_batch(
    items: list[tuple[str, Callable[[], str]]], jobs: int
) -> tuple[list[ItemResult], int]:
    """Run per-input closures concurrently; collect sorted results."""

    def run_one(item: tuple[str, Callable[[], str]]) -> ItemResult:
        path, fn = item
        try:
            return ItemResult(path, True, fn())
        except ScleraQcError as e:
            return ItemResult(path, False, str(e))
        except OSError as e:
            return ItemResult(path, False, str(e))

    if jobs <= 1 or len(items) <= 1:
        results = [run_one(item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, items))
    results.sort(key=lambda r: r.input_path)
    for r in results:
        status = "ok" if r.ok else "FAILED"
        print(f"{status}\t{r.input_path}\t{r.message}", file=sys.stderr)
    return results, 0 if all(r.ok for r in results) else 1


def _load_thresholds(flag_path: str | None) -> QualityThresholds:
    path = flag_path or os.environ.get(THRESHOLDS_ENV_VAR)
    if not path:
        return QualityThresholds()
    try:
        doc = json.loads(Path(path).read_text())
        if not isinstance(doc, dict):
            raise ValueError("thresholds file must hold a JSON object")
        return QualityThresholds(**doc)
    except (OSError, ValueError, TypeError) as e:
        raise UsageError(f"thresholds file {path}: {e}") from e


class UsageError(Exception):
    pass


def _stem_out(out_dir: str, input_path: str, suffix: str) -> Path:
    return Path(out_dir) / (Path(input_path).stem + suffix)


def _paired_landmarks(args: argparse.Namespace) -> list[str]:
    if len(args.landmarks) != len(args.images):
        raise UsageError(
            f"need one --landmarks per image: {len(args.images)} images, "
            f"{len(args.landmarks)} landmark files"
        )
    return args.landmarks


def _single_or_dir(args: argparse.Namespace, single_flags: list[str]) -> None:
    multi = len(args.images) > 1
    if multi:
        if not args.out_dir:
            raise UsageError("multiple images require --out-dir")
    else:
        have_single = any(getattr(args, f.replace("-", "_")) for f in single_flags)
        if not have_single and not args.out_dir:
            raise UsageError(f"provide --out-dir or explicit output paths ({', '.join('--' + f for f in single_flags)})")


def _write_histograms(image, lm, masks, out_dir: str, stem: str) -> list[str]:
    written = []
    for side in (EyeSide.LEFT, EyeSide.RIGHT):
        if side in masks and masks[side].pixel_count > 0:
            path = Path(out_dir) / f"{stem}.{side.value}_sclera.csv"
            path.write_bytes(export_histogram_csv(region_stats(image, masks[side])))
            written.append(str(path))
    if lm.has_face_oval:
        path = Path(out_dir) / f"{stem}.face_oval.csv"
        path.write_bytes(
            export_histogram_csv(polygon_region_stats(image, convex_hull(lm.group("face_oval"))))
        )
        written.append(str(path))
    return written


# ---------------------------------------------------------------- segment


def _cmd_segment(args: argparse.Namespace) -> int:
    landmarks = _paired_landmarks(args)
    _single_or_dir(args, ["mask-out", "overlay-out"])
    items = []
    for img_path, lm_path in zip(args.images, landmarks):
        if len(args.images) == 1 and (args.mask_out or args.overlay_out):
            mask_out = Path(args.mask_out) if args.mask_out else None
            overlay_out = Path(args.overlay_out) if args.overlay_out else None
            sidecar_out = Path(args.sidecar_out) if args.sidecar_out else (
                Path(str(mask_out) + ".json") if mask_out else None
            )
        else:
            mask_out = _stem_out(args.out_dir, img_path, ".mask.png")
            overlay_out = _stem_out(args.out_dir, img_path, ".overlay.png")
            sidecar_out = _stem_out(args.out_dir, img_path, ".mask.json")
        outputs = [p for p in (mask_out, overlay_out, sidecar_out) if p]
        _check_no_overwrite([img_path, lm_path], outputs)

        def work(img_path=img_path, lm_path=lm_path, mask_out=mask_out,
                 overlay_out=overlay_out, sidecar_out=sidecar_out) -> str:
            image = load_image(img_path)
            lm = _read_landmarks(lm_path)
            height, width = image.shape[:2]
            result = segment_both(lm, width, height)
            masks = [result.masks[s] for s in (EyeSide.LEFT, EyeSide.RIGHT) if s in result.masks]
            if mask_out:
                save_png(mask_out, mask_to_image(masks, width, height))
            if overlay_out:
                save_png(overlay_out, render_overlay(image, masks, tuple(args.overlay_color)))
            if sidecar_out:
                sidecar = {
                    "image": {"width": width, "height": height},
                    "masks": [
                        {
                            "side": m.side.value,
                            "rect": [m.rect.x0, m.rect.y0, m.rect.x1, m.rect.y1],
                            "pixel_count": m.pixel_count,
                        }
                        for m in masks
                    ],
                    "failures": {s.value: msg for s, msg in sorted(result.failures.items(), key=lambda kv: kv[0].value)},
                }
                Path(sidecar_out).write_text(json.dumps(sidecar, indent=2) + "\n")
            counts = ", ".join(f"{m.side.value}={m.pixel_count}px" for m in masks)
            extra = f" (failed: {', '.join(s.value for s in result.failures)})" if result.failures else ""
            return counts + extra

        items.append((img_path, work))
    _, code = _run_batch(items, args.jobs)
    return code


# ---------------------------------------------------------------- stats


def _cmd_stats(args: argparse.Namespace) -> int:
    landmarks = _paired_landmarks(args)
    _single_or_dir(args, ["out"])
    items = []
    for img_path, lm_path in zip(args.images, landmarks):
        out = Path(args.out) if (len(args.images) == 1 and args.out) else _stem_out(args.out_dir, img_path, ".stats.json")
        _check_no_overwrite([img_path, lm_path], [out])

        def work(img_path=img_path, lm_path=lm_path, out=out) -> str:
            image = load_image(img_path)
            lm = _read_landmarks(lm_path)
            height, width = image.shape[:2]
            result = segment_both(lm, width, height)
            regions: dict = {}
            for side in (EyeSide.LEFT, EyeSide.RIGHT):
                if side in result.masks and result.masks[side].pixel_count > 0:
                    s = region_stats(image, result.masks[side])
                    regions[f"{side.value}_sclera"] = {
                        "pixel_count": s.pixel_count,
                        "mean_all_channels": s.mean_all_channels,
                        "mean_per_channel": list(s.mean_per_channel),
                        "mean_luma": s.mean_luma,
                        "std_luma": s.std_luma,
                    }
            if lm.has_face_oval:
                s = polygon_region_stats(image, convex_hull(lm.group("face_oval")))
                regions["face_oval"] = {
                    "pixel_count": s.pixel_count,
                    "mean_all_channels": s.mean_all_channels,
                    "mean_per_channel": list(s.mean_per_channel),
                    "mean_luma": s.mean_luma,
                    "std_luma": s.std_luma,
                }
            doc = {"source": img_path, "regions": regions}
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(json.dumps(doc, indent=2) + "\n")
            written = [str(out)]
            if args.histograms_out:
                Path(args.histograms_out).mkdir(parents=True, exist_ok=True)
                written += _write_histograms(image, lm, result.masks, args.histograms_out, Path(img_path).stem)
            return "wrote " + ", ".join(written)

        items.append((img_path, work))
    _, code = _run_batch(items, args.jobs)
    return code


# ---------------------------------------------------------------- saturate


def _cmd_saturate(args: argparse.Namespace) -> int:
    _single_or_dir(args, ["out"])
    items = []
    for img_path in args.images:
        out = Path(args.out) if (len(args.images) == 1 and args.out) else _stem_out(
            args.out_dir, img_path, f".f{args.factor:g}.png"
        )
        _check_no_overwrite([img_path], [out])

        def work(img_path=img_path, out=out) -> str:
            image = load_image(img_path)
            save_png(out, adjust_saturation(image, args.factor))
            return f"wrote {out}"

        items.append((img_path, work))
    _, code = _run_batch(items, args.jobs)
    return code


# ---------------------------------------------------------------- sweep


def _cmd_sweep(args: argparse.Namespace) -> int:
    landmarks = _paired_landmarks(args)
    _single_or_dir(args, ["out"])
    try:
        factors = [float(tok) for tok in args.factors.split(",") if tok.strip()]
    except ValueError as e:
        raise UsageError(f"--factors: {e}") from e
    if not factors:
        raise UsageError("--factors must list at least one factor")
    items = []
    for img_path, lm_path in zip(args.images, landmarks):
        out = Path(args.out) if (len(args.images) == 1 and args.out) else _stem_out(args.out_dir, img_path, ".sweep.csv")
        _check_no_overwrite([img_path, lm_path], [out])

        def work(img_path=img_path, lm_path=lm_path, out=out) -> str:
            image = load_image(img_path)
            lm = _read_landmarks(lm_path)
            table = saturation_sweep(image, lm, factors)
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_bytes(table.to_csv())
            return f"wrote {out} ({len(table.rows)} rows)"

        items.append((img_path, work))
    _, code = _run_batch(items, args.jobs)
    return code


# ---------------------------------------------------------------- assess


def _cmd_assess(args: argparse.Namespace) -> int:
    landmarks = _paired_landmarks(args)
    _single_or_dir(args, ["out"])
    thresholds = _load_thresholds(args.thresholds)
    items = []
    for img_path, lm_path in zip(args.images, landmarks):
        out = Path(args.out) if (len(args.images) == 1 and args.out) else _stem_out(args.out_dir, img_path, ".report.json")
        _check_no_overwrite([img_path, lm_path], [out])

        def work(img_path=img_path, lm_path=lm_path, out=out) -> str:
            image = load_image(img_path)
            lm = _read_landmarks(lm_path)
            report = assess(image, lm, thresholds)
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_bytes(serialize_report(report))
            written = [str(out)]
            if args.histograms_out:
                Path(args.histograms_out).mkdir(parents=True, exist_ok=True)
                height, width = image.shape[:2]
                result = segment_both(lm, width, height)
                written += _write_histograms(image, lm, result.masks, args.histograms_out, Path(img_path).stem)
            flagged = [k for k, v in report.indicators.items() if v]
            return "indicators: " + (", ".join(flagged) if flagged else "none")

        items.append((img_path, work))
    _, code = _run_batch(items, args.jobs)
    return code


# ------------------------------------------------------- validate-landmarks


def _cmd_validate(args: argparse.Namespace) -> int:
    if args.image and len(args.image) != len(args.landmark_files):
        raise UsageError("need one --image per landmark file (or none)")
    failed = False
    for i, lm_path in enumerate(args.landmark_files):
        try:
            lm = _read_landmarks(lm_path)
        except (ScleraQcError, OSError) as e:
            print(f"invalid\t{lm_path}\t{e}", file=sys.stderr)
            failed = True
            continue
        warnings = []
        if args.image:
            image = load_image(args.image[i])
            height, width = image.shape[:2]
            warnings = validate_against_image(lm, width, height)
        print(f"{lm_path}: valid, {len(lm.groups)} groups, {len(warnings)} warnings")
        for w in warnings:
            print(f"  warning[{w.kind}]: {w.message}")
    return 1 if failed else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scleraqc",
        description="Sclera segmentation and skin-tone agnostic quality statistics for face images.",
    )
    parser.add_argument("--version", action="version", version=f"scleraqc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_landmarks: bool = True) -> None:
        p.add_argument("images", nargs="+", help="input image(s), PNG or JPEG")
        if with_landmarks:
            p.add_argument("--landmarks", action="append", default=[], required=True,
                           help="landmark JSON for each image (repeat per image)")
        p.add_argument("--out-dir", help="output directory for batch runs")
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                       help="max concurrent inputs (default: cpu count)")

    p = sub.add_parser("segment", help="write sclera mask, overlay and sidecar")
    add_common(p)
    p.add_argument("--mask-out", help="mask PNG path (single image)")
    p.add_argument("--overlay-out", help="overlay PNG path (single image)")
    p.add_argument("--sidecar-out", help="sidecar JSON path (default: <mask-out>.json)")
    p.add_argument("--overlay-color", type=int, nargs=3, default=[255, 255, 255],
                   metavar=("R", "G", "B"), help="overlay paint color (default white)")
    p.set_defaults(fn=_cmd_segment)

    p = sub.add_parser("stats", help="write region statistics JSON (and histogram CSVs)")
    add_common(p)
    p.add_argument("--out", help="stats JSON path (single image)")
    p.add_argument("--histograms-out", help="directory for per-region histogram CSVs")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("saturate", help="write a saturation-adjusted copy of the image")
    add_common(p, with_landmarks=False)
    p.add_argument("--factor", type=float, required=True, help="saturation factor (> 0)")
    p.add_argument("--out", help="output PNG path (single image)")
    p.set_defaults(fn=_cmd_saturate)

    p = sub.add_parser("sweep", help="write the saturation-sweep mean table as CSV")
    add_common(p)
    p.add_argument("--factors", default="1,2,3,4,5", help="comma-separated factors")
    p.add_argument("--out", help="CSV path (single image)")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("assess", help="write the quality report JSON")
    add_common(p)
    p.add_argument("--out", help="report JSON path (single image)")
    p.add_argument("--histograms-out", help="directory for per-region histogram CSVs")
    p.add_argument("--thresholds", help=f"thresholds JSON file (overrides ${THRESHOLDS_ENV_VAR})")
    p.set_defaults(fn=_cmd_assess)

    p = sub.add_parser("validate-landmarks", help="validate landmark files against the schema")
    p.add_argument("landmark_files", nargs="+", help="landmark JSON file(s)")
    p.add_argument("--image", action="append", help="image to check dimensions/bounds against")
    p.set_defaults(fn=_cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except ScleraQcError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
