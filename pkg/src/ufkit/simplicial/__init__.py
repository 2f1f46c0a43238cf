"""Finite simplicial sets, Kan conditions and univalence checks at small scale."""

from .constructions import (
    EqSelf,
    InputNotTrivialFibration,
    MapSpace,
    NotAMonomorphism,
    PathObject,
    RepSpace,
    dependent_product,
    dependent_product_over,
    eq_over,
    eq_self,
    extend_trivial_fibration,
    fibered_path_object,
    hom_over,
    is_univalent,
    rep_space,
    representation_space,
    path_object_base_change,
    restriction,
)
from .core import (
    BadIndex,
    BadPresentation,
    BeyondBound,
    Delta,
    Fiber,
    FinSSet,
    ProductSSet,
    PullbackSSet,
    SMap,
    SSet,
    TruncatedSSet,
    check_identities,
    compose_maps,
    fin_map,
    identity,
    materialize,
    product_projection,
    to_point,
    yoneda,
)
from .generators import boundary, chaotic, delta, discrete, disjoint_union, horn, inclusion, point, product, pullback
from .homology import Group, homology, pi0
from .kan import (
    LiftingProblem,
    Verdict,
    is_contractible_kan,
    is_kan_complex,
    is_kan_fibration,
    is_trivial_fibration,
    kan_oracle,
    trivial_fibration_oracle,
)
from .maps import count_maps, enumerate_maps
from .text import (
    FormatError,
    fixture_names,
    fixture_text,
    format_map,
    format_sset,
    load_smap,
    load_sset,
    parse_map,
    parse_sset,
)
from .weq import OracleInconclusive, is_fiberwise_equivalence, is_weak_equivalence

SSetMap = SMap
