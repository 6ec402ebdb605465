"""Monte-Carlo harness for random-shape models of Feret processes.

Randomness is counter-based: a Philox stream keyed by the seed is treated as
a flat sequence of uniform draws, and sample k owns a fixed window of them
determined by the model's per-sample draw count (size variables first,
rotation angle last; the window is padded to whole 4-word counter blocks,
the unit Philox skips by).  Normal deviates come from uniforms through the
inverse CDF so the budget stays fixed.  Every estimate is then a
deterministic function of (seed, sample index) alone: parallel workers
produce bit-identical results in any configuration, and sums are reduced in
a fixed chunked order.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.special import ndtri

from .bodies import Ellipse, regular_subdivision
from .errors import ParameterError
from .process import FeretProcessMoments, central_from_feret, isotropize_moments
from .zonotopes import Zonotope

CHUNK = 4096

#: Philox advances its counter in blocks of four 64-bit words; per-sample
#: draw windows are padded to whole blocks so they can be skipped to exactly.
_WORDS_PER_BLOCK = 4


def _uniform_block(seed, start_block, shape):
    """Uniforms from the seed-keyed Philox stream, starting at a counter block."""
    if not isinstance(seed, (int, np.integer)) or seed < 0:
        raise ParameterError(f"seed must be a nonnegative integer, got {seed!r}")
    bg = np.random.Philox(key=int(seed))
    if start_block:
        bg.advance(int(start_block))
    return np.random.Generator(bg).random(shape)


def _stride(model):
    """Per-sample stream window as (counter blocks, padded word count)."""
    blocks = -(-model.words_per_sample // _WORDS_PER_BLOCK)
    return blocks, blocks * _WORDS_PER_BLOCK


def worker_count(threads=None):
    """Worker cap: the `threads` argument, else ZONOFIT_THREADS, else 1."""
    if threads is None:
        threads = int(os.environ.get("ZONOFIT_THREADS", "1"))
    if threads < 1:
        raise ParameterError(f"thread count must be >= 1, got {threads}")
    return threads


class SizeDistribution:
    """Base for nonnegative size-vector distributions with a fixed draw budget."""

    #: number of uniform words consumed per sample
    draw_count = 0
    #: length of the produced size vector
    dim = 0

    def transform(self, u):
        """Map a (k, draw_count) uniform block to (k, dim) size vectors."""
        raise NotImplementedError


class Fixed(SizeDistribution):
    """Degenerate distribution concentrated on one nonnegative vector."""

    draw_count = 0

    def __init__(self, value):
        v = np.atleast_1d(np.asarray(value, dtype=float))
        if v.min() < 0:
            raise ParameterError("fixed size vector must be nonnegative")
        self.value = v
        self.dim = len(v)

    def transform(self, u):
        return np.tile(self.value, (len(u), 1))


class Mixture(SizeDistribution):
    """Finite mixture of nonnegative vectors with given weights."""

    draw_count = 1

    def __init__(self, atoms, weights):
        a = np.atleast_2d(np.asarray(atoms, dtype=float))
        w = np.asarray(weights, dtype=float)
        if len(a) != len(w) or len(a) == 0:
            raise ParameterError("need one weight per atom")
        if a.min() < 0:
            raise ParameterError("mixture atoms must be nonnegative")
        if w.min() < 0 or abs(w.sum() - 1.0) > 1e-9:
            raise ParameterError("weights must be nonnegative and sum to 1")
        self.atoms = a
        self.weights = w / w.sum()
        self.dim = a.shape[1]
        self._cum = np.cumsum(self.weights)

    def transform(self, u):
        idx = np.searchsorted(self._cum, u[:, 0], side="right")
        return self.atoms[np.minimum(idx, len(self.atoms) - 1)]


class LogNormal(SizeDistribution):
    """Independent lognormal components exp(mu + sigma * Phi^-1(u))."""

    def __init__(self, dim, mu=0.0, sigma=0.25):
        if dim < 1:
            raise ParameterError("dimension must be >= 1")
        if sigma < 0:
            raise ParameterError("sigma must be >= 0")
        self.dim = int(dim)
        self.draw_count = int(dim)
        self.mu = float(mu)
        self.sigma = float(sigma)

    def transform(self, u):
        return np.exp(self.mu + self.sigma * ndtri(u))


class RandomShapeModel:
    """Base for shape-valued random models; see the concrete kinds below."""

    kind = "abstract"
    is_isotropic = True
    #: uniform words consumed per sample
    words_per_sample = 0

    def feret_block(self, u, grid):
        """Feret diameters, shape (samples, len(grid)), from a uniform block."""
        raise NotImplementedError

    def sample_one(self, u_row):
        """One realization as a shape object from this sample's uniform words."""
        raise NotImplementedError


class DeterministicBody(RandomShapeModel):
    """A fixed symmetric convex body; consumes no randomness."""

    kind = "deterministic_body"
    is_isotropic = False
    words_per_sample = 0

    def __init__(self, body):
        self.body = body

    def feret_block(self, u, grid):
        h = np.asarray(self.body.feret(grid), dtype=float)
        return np.tile(h, (len(u), 1))

    def sample_one(self, u_row):
        return self.body


class _IsotropicZonotopeBase(RandomShapeModel):
    """Shared sampling for zonotopes with random faces under uniform rotation."""

    def __init__(self, directions, sizes):
        if sizes.dim != len(directions):
            raise ParameterError(
                f"size distribution produces {sizes.dim} components, "
                f"model needs {len(directions)}"
            )
        self.directions = directions
        self.sizes = sizes
        self.words_per_sample = sizes.draw_count + 1

    def feret_block(self, u, grid):
        faces = self.sizes.transform(u[:, : self.sizes.draw_count])
        eta = np.pi * u[:, self.sizes.draw_count]
        gaps = grid[None, :, None] - eta[:, None, None] - self.directions[None, None, :]
        return np.einsum("sgi,si->sg", np.abs(np.sin(gaps)), faces)

    def sample_one(self, u_row):
        faces = self.sizes.transform(u_row[None, : self.sizes.draw_count])[0]
        eta = float(np.pi * u_row[self.sizes.draw_count])
        return Zonotope(faces, t=eta)


class IsotropicZonotope(_IsotropicZonotopeBase):
    """Isotropic zonotope on the regular n-direction grid with random face lengths.

    Per sample: the face vector is drawn first, then an independent rotation
    uniform on [0, pi).
    """

    kind = "isotropic_zonotope"

    def __init__(self, n, faces):
        super().__init__(regular_subdivision(n), faces)
        self.n = int(n)


class IsotropicRectangle(_IsotropicZonotopeBase):
    """Uniformly rotated rectangle with random side lengths (a 2-direction zonotope)."""

    kind = "isotropic_rectangle"

    def __init__(self, sides):
        super().__init__(regular_subdivision(2), sides)


class IsotropicEllipse(RandomShapeModel):
    """Uniformly rotated ellipse with random semiaxes (a, b)."""

    kind = "isotropic_ellipse"

    def __init__(self, semiaxes):
        if semiaxes.dim != 2:
            raise ParameterError("ellipse model needs a 2-component size distribution")
        self.semiaxes = semiaxes
        self.words_per_sample = semiaxes.draw_count + 1

    def feret_block(self, u, grid):
        ab = self.semiaxes.transform(u[:, : self.semiaxes.draw_count])
        phi = np.pi * u[:, self.semiaxes.draw_count]
        t = grid[None, :] - phi[:, None]
        return 2.0 * np.sqrt(
            (ab[:, :1] * np.sin(t)) ** 2 + (ab[:, 1:] * np.cos(t)) ** 2
        )

    def sample_one(self, u_row):
        ab = self.semiaxes.transform(u_row[None, : self.semiaxes.draw_count])[0]
        phi = float(np.pi * u_row[self.semiaxes.draw_count])
        return Ellipse(ab[0], ab[1], phi)


def sample_shape(model, stream_index, seed):
    """Realization number `stream_index`: a pure function of (seed, stream_index)."""
    if stream_index < 0:
        raise ParameterError("stream index must be >= 0")
    blocks, words = _stride(model)
    if words == 0:
        return model.sample_one(np.zeros(0))
    return model.sample_one(_uniform_block(seed, stream_index * blocks, words))


def empirical_moments(h, stationary=False):
    """Feret-process moments from an observed diameter table of shape (samples, n).

    Means, raw second moments, and their standard errors (sample standard
    deviation over sqrt(samples)).
    """
    h = np.atleast_2d(np.asarray(h, dtype=float))
    samples = h.shape[0]
    if samples < 2:
        raise ParameterError("need at least 2 samples")
    sq = h * h
    mean = h.mean(axis=0)
    second = np.einsum("si,sj->ij", h, h) / samples
    var_mean = np.maximum(np.add.reduce(sq, axis=0) - samples * mean**2, 0.0)
    q2 = np.einsum("si,sj->ij", sq, sq)
    var_second = np.maximum(q2 - samples * second**2, 0.0)
    return FeretProcessMoments(
        mean=mean,
        second=second,
        stderr_mean=np.sqrt(var_mean / (samples - 1) / samples),
        stderr_second=np.sqrt(var_second / (samples - 1) / samples),
        stationary=stationary,
    )


class EstimationResult:
    """Estimated process moments together with the sample count and seed."""

    def __init__(self, moments, sample_count, seed):
        self.moments = moments
        self.sample_count = int(sample_count)
        self.seed = int(seed)

    def __repr__(self):
        return f"EstimationResult(samples={self.sample_count}, seed={self.seed})"


def _tree_sum(parts):
    """Pairwise combination in fixed order, independent of how parts were produced."""
    items = list(parts)
    while len(items) > 1:
        items = [
            items[i] + items[i + 1] if i + 1 < len(items) else items[i]
            for i in range(0, len(items), 2)
        ]
    return items[0]


def feret_sample_block(model, n, seed, start, count):
    """Feret diameters of samples [start, start+count) on the regular n-grid."""
    grid = regular_subdivision(n)
    blocks, words = _stride(model)
    if words == 0:
        u = np.zeros((count, 0))
    else:
        u = _uniform_block(seed, start * blocks, (count, words))
    return model.feret_block(u, grid)


def estimate_process_moments(model, n, samples, seed, threads=None):
    """Empirical first and second Feret-process moments on the regular n-grid.

    Per-sample diameters are generated in fixed chunks; within each chunk the
    reductions are numpy's pairwise sums over the sample axis and chunk
    partials combine in a fixed tree, so the result is bit-identical for any
    worker count.  Standard errors are the entrywise sample standard
    deviations divided by sqrt(samples).
    """
    if samples < 2:
        raise ParameterError("need at least 2 samples")
    threads = worker_count(threads)
    starts = list(range(0, samples, CHUNK))

    def work(start):
        count = min(CHUNK, samples - start)
        h = feret_sample_block(model, n, seed, start, count)
        sq = h * h
        return (
            np.add.reduce(h, axis=0),
            np.add.reduce(h[:, :, None] * h[:, None, :], axis=0),
            np.add.reduce(sq, axis=0),
            np.add.reduce(sq[:, :, None] * sq[:, None, :], axis=0),
        )

    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, starts))
    else:
        parts = [work(s) for s in starts]

    s1 = _tree_sum([p[0] for p in parts])
    s2 = _tree_sum([p[1] for p in parts])
    q1 = _tree_sum([p[2] for p in parts])
    q2 = _tree_sum([p[3] for p in parts])

    mean = s1 / samples
    second = s2 / samples
    var_mean = np.maximum(q1 - samples * mean**2, 0.0) / (samples - 1)
    var_second = np.maximum(q2 - samples * second**2, 0.0) / (samples - 1)
    return EstimationResult(
        FeretProcessMoments(
            mean=mean,
            second=second,
            stderr_mean=np.sqrt(var_mean / samples),
            stderr_second=np.sqrt(var_second / samples),
            stationary=model.is_isotropic,
        ),
        samples,
        seed,
    )


def pipeline_estimate(model, n, samples, seed, threads=None):
    """Sample -> process moments -> (isotropize if needed) -> central face moments."""
    est = estimate_process_moments(model, n, samples, seed, threads=threads)
    m = est.moments
    if not m.stationary:
        m = isotropize_moments(m)
    return central_from_feret(m)
