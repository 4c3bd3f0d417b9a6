import zlib

import numpy as np


def derive_rng(seed, *keys):
    """A Generator that depends only on the seed and the given keys.

    Every verification step draws from its own stream, so adding or skipping a
    step never shifts the random maps another step sees.
    """
    entropy = [int(seed)] + [zlib.crc32(str(key).encode('utf-8')) for key in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))
