import pytest

from matchkit.graphs import (cycle, complete_bipartite, heawood, hypercube, torus)
from matchkit.matchpoly import matching_polynomial
from matchkit.spectra import isolate_spectrum


def corpus_graphs():
    return [cycle(4), cycle(6), cycle(8),
            complete_bipartite(2), complete_bipartite(3), complete_bipartite(4),
            hypercube(3), hypercube(4), heawood(),
            torus((4, 4)), torus((6, 6))]


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()


@pytest.fixture(scope="session")
def corpus_polys(corpus):
    return {g.label: (g, matching_polynomial(g)) for g in corpus}


@pytest.fixture(scope="session")
def corpus_spectra(corpus_polys):
    return {label: (g, poly, isolate_spectrum(poly))
            for label, (g, poly) in corpus_polys.items()}
