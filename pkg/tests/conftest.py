import numpy as np
import pytest


def random_density(rng: np.random.Generator, dim: int = 9) -> np.ndarray:
    """Ginibre-induced random density matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def random_product_density(rng: np.random.Generator) -> np.ndarray:
    """Random 9x9 product state rho_A (x) rho_B."""
    return np.kron(random_density(rng, 3), random_density(rng, 3))


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240901)
