"""
Method Grammar
Turns --method / --scheme / --scf / --index / --sampling into a DSF.
"""
from typing import Optional

from ..engine.dsf import (
    DecompositionScheme, Dsf, IndexBasedDsf, NavarreteDsf, RankVarianceDsf, ScfBasedDsf, ScoreBasedDsf,
)
from ..model.errors import ProfileInputError
from ..rules.indices import ProfileIndex
from ..rules.scoring import ScoringScheme
from ..rules.voting import Scf

METHODS = ('rankvar', 'navarrete', 'score', 'scf', 'index')

DEFAULT_SCHEME = 'nborda'
DEFAULT_SCF = 'borda'
DEFAULT_INDEX = 'kendall'


def build_dsf(
    method: str,
    scheme: Optional[str] = None,
    scf: Optional[str] = None,
    index: Optional[str] = None,
    sampling: str = 'exact',
    seed: Optional[int] = None,
    exact_cap: Optional[int] = None,
    workers: int = 1,
    include_trivial: bool = False,
) -> Dsf:
    """A DSF from its textual description; unused parameters are ignored."""
    if method == 'rankvar':
        return RankVarianceDsf()
    if method == 'navarrete':
        return NavarreteDsf(ScoringScheme.parse(scheme or DEFAULT_SCHEME))
    if method == 'index':
        return IndexBasedDsf(ProfileIndex.parse(index or DEFAULT_INDEX))
    if method in ('score', 'scf'):
        decomposition = DecompositionScheme.parse(sampling, seed=seed, cap=exact_cap, workers=workers)
        if include_trivial:
            if decomposition.kind != 'exact':
                raise ProfileInputError("--include-trivial only applies to exact sampling")
            decomposition = DecompositionScheme.exact(cap=exact_cap, include_trivial=True)
        if method == 'score':
            return ScoreBasedDsf(ScoringScheme.parse(scheme or DEFAULT_SCHEME), decomposition)
        return ScfBasedDsf(Scf.parse(scf or DEFAULT_SCF), decomposition)
    raise ProfileInputError(f"unknown method {method!r} (expected one of: {', '.join(METHODS)})")


def describe_method(method: str) -> str:
    return {
        'rankvar': "rank variance",
        'navarrete': "pairwise supporters (scoring scheme --scheme)",
        'score': "score-based over bipartitions (--scheme, --sampling)",
        'scf': "SCF-based over bipartitions (--scf, --sampling)",
        'index': "profile-index-based, argmin (--index)",
    }[method]
