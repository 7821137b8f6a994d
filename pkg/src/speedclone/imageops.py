"""Low-level grayscale image utilities: PGM I/O and bilinear resampling.

Images are 2-D float arrays with intensities in [0, 1], indexed [row, col].
On disk they are binary PGM (P5) with maxval 255; the stored byte is
round(255 * value), so one save/load round trip quantizes to k/255 and a
second round trip is byte-identical.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import DataError


def image_to_bytes(image: np.ndarray) -> np.ndarray:
    """Quantize a [0,1] float image to uint8 via round-half-even."""
    return np.rint(np.clip(image, 0.0, 1.0) * 255.0).astype(np.uint8)


def bytes_to_image(raw: np.ndarray) -> np.ndarray:
    return raw.astype(np.float32) / np.float32(255.0)


def write_pgm(image: np.ndarray, path: str) -> None:
    """Write a [0,1] float image as binary PGM (P5, maxval 255)."""
    data = image_to_bytes(np.asarray(image))
    h, w = data.shape
    with open(path, "wb") as fh:
        fh.write(b"P5\n%d %d\n255\n" % (w, h))
        fh.write(data.tobytes())


def read_pgm(path: str) -> np.ndarray:
    """Read a binary PGM file back to a [0,1] float image."""
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        tokens = []
        pos = 0
        while len(tokens) < 4:
            while pos < len(raw) and raw[pos : pos + 1].isspace():
                pos += 1
            if raw[pos : pos + 1] == b"#":  # comment line
                while pos < len(raw) and raw[pos : pos + 1] != b"\n":
                    pos += 1
                continue
            start = pos
            while pos < len(raw) and not raw[pos : pos + 1].isspace():
                pos += 1
            tokens.append(raw[start:pos])
        pos += 1  # single whitespace after maxval
        magic, w_s, h_s, maxval_s = tokens
        if magic != b"P5":
            raise ValueError("not a P5 file")
        w, h, maxval = int(w_s), int(h_s), int(maxval_s)
        if maxval != 255:
            raise ValueError(f"unsupported maxval {maxval}")
        pixels = np.frombuffer(raw, dtype=np.uint8, count=w * h, offset=pos)
        if pixels.size != w * h:
            raise ValueError("pixel payload shorter than header promises")
    except (ValueError, IndexError) as exc:
        raise DataError(f"malformed PGM header/payload in {os.path.basename(path)}: {exc}") from exc
    return bytes_to_image(pixels.reshape(h, w))


def read_pgm_u8(path: str) -> np.ndarray:
    """Read a PGM as raw uint8 (memory-lean path for training data)."""
    img = read_pgm(path)
    return np.rint(img * 255.0).astype(np.uint8)


def write_ppm(image_rgb: np.ndarray, path: str) -> None:
    """Write an [H, W, 3] array of [0,1] floats as binary PPM (P6)."""
    data = np.rint(np.clip(image_rgb, 0.0, 1.0) * 255.0).astype(np.uint8)
    h, w, _ = data.shape
    with open(path, "wb") as fh:
        fh.write(b"P6\n%d %d\n255\n" % (w, h))
        fh.write(data.tobytes())


def bilinear_sample(image: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Sample `image` at fractional (row, col) coordinate grids with edge clamping."""
    h, w = image.shape
    r0 = np.floor(rows)
    c0 = np.floor(cols)
    fr = rows - r0
    fc = cols - c0
    r0 = np.clip(r0.astype(np.int64), 0, h - 1)
    c0 = np.clip(c0.astype(np.int64), 0, w - 1)
    r1 = np.clip(r0 + 1, 0, h - 1)
    c1 = np.clip(c0 + 1, 0, w - 1)
    top = image[r0, c0] * (1.0 - fc) + image[r0, c1] * fc
    bot = image[r1, c0] * (1.0 - fc) + image[r1, c1] * fc
    out = top * (1.0 - fr) + bot * fr
    return out.astype(image.dtype, copy=False)


def bilinear_resize(image: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Resize with bilinear interpolation (pixel centers at i+0.5)."""
    h, w = image.shape
    if (out_h, out_w) == (h, w):
        return image.copy()
    rows = (np.arange(out_h, dtype=np.float64) + 0.5) * (h / out_h) - 0.5
    cols = (np.arange(out_w, dtype=np.float64) + 0.5) * (w / out_w) - 0.5
    rr, cc = np.meshgrid(rows, cols, indexing="ij")
    return bilinear_sample(image, rr, cc)
