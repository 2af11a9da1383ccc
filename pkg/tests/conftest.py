"""Shared fixtures: the built-in worked model and its derived geometry.

Everything is session scoped; the objects are immutable, so sharing them
across test modules is safe and keeps the exact arithmetic cheap.
"""

import pytest

from rsthl.associated import build_associated, tilde_curvature
from rsthl.builtin import example_model
from rsthl.liegeom import curvature, levi_civita
from rsthl.lightlike import (build_frame, certify_ascreen_rsthl,
                             gauss_weingarten, induced_curvature, umbilicity)
from rsthl.structure import fit_curvature_pair


@pytest.fixture(scope="session")
def model():
    return example_model()


@pytest.fixture(scope="session")
def lm(model):
    return model.lie_model()


@pytest.fixture(scope="session")
def ambient_conn(lm):
    return levi_civita(lm.algebra, lm.metric)


@pytest.fixture(scope="session")
def ambient_r4(lm, ambient_conn):
    return curvature(ambient_conn, lm.algebra).lower(lm.metric)


@pytest.fixture(scope="session")
def pair(lm, ambient_r4):
    return fit_curvature_pair(lm.structure, ambient_r4)


@pytest.fixture(scope="session")
def frame(model, lm):
    sub = model.submanifold
    return build_frame(lm, sub.screen_labels, sub.screen, sub.rad,
                       sub.l_vec, sub.n_vec)


@pytest.fixture(scope="session")
def mu(frame):
    value, _ = certify_ascreen_rsthl(frame)
    return value


@pytest.fixture(scope="session")
def induced(frame, ambient_conn):
    return gauss_weingarten(frame, ambient_conn)


@pytest.fixture(scope="session")
def ureport(frame, induced):
    return umbilicity(frame, induced)


@pytest.fixture(scope="session")
def icurv(frame, induced):
    return induced_curvature(frame, induced)


@pytest.fixture(scope="session")
def iric(icurv):
    return icurv.ricci()


@pytest.fixture(scope="session")
def twin(frame, induced, mu, ambient_conn):
    assoc, _ = build_associated(frame, induced, mu, ambient_conn)
    return assoc


@pytest.fixture(scope="session")
def tcurv(frame, twin):
    return tilde_curvature(frame, twin)


@pytest.fixture(scope="session")
def tric(tcurv):
    return tcurv.ricci()
