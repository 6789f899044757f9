import numpy as np


def keyed_rng(seed, *keys):
    """Counter-based generator keyed by ``(seed, *keys)``.

    Draws depend only on the key tuple, never on call order, so trials can
    be evaluated in any order or in parallel with identical results.
    """
    entropy = [int(seed) & 0xFFFFFFFF] + [int(k) & 0xFFFFFFFF for k in keys]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))
