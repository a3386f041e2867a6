"""
The canonical cohomogeneity-one actions on M^2, M^3 and M^{n+1}.

Every class is represented by a subalgebra of iso(M^{n+1}) whose connected
group is the canonical representative of its orbit-equivalence class.
"""
from __future__ import absolute_import, division

import enum
import itertools

import attr
import numpy as np

from cohom1.errors import UnsupportedAction
from cohom1.geometry import basis_vector, w0
from cohom1.lie import (
    IsoElement, LieElement, Subalgebra, Y_A, Y_K, Y_N, Y_SO11, boost_a,
    exp_iso, iwasawa_generators, nilpotent_n,
)


DEFAULT_LAMBDAS = (0.0, 0.5, 1.0, 2.0)


@enum.unique
class ActionClass(enum.Enum):
    # M^2
    R1 = "R1"
    M1 = "M1"
    W1 = "W1"
    SO11 = "SO11"
    # M^3
    R2 = "R2"
    M2 = "M2"
    W2 = "W2"
    KxRe3 = "KxRe3"
    AxRe1 = "AxRe1"
    NxEll = "NxEll"
    N1xEll = "N1xEll"
    ALambdaEll = "ALambdaEll"
    SO21 = "SO21"
    AN = "AN"
    # M^{n+1}, n >= 3
    SOn1 = "SOn1"
    KprimeAN = "KprimeAN"

    @classmethod
    def from_string(cls, name):
        try:
            return cls(name)
        except ValueError:
            lowered = dict((c.value.lower(), c) for c in cls)
            try:
                return lowered[name.lower()]
            except KeyError:
                raise UnsupportedAction(
                    "Unknown action {0!r}, expected one of {1}".format(
                        name, ", ".join(c.value for c in cls)))


_AMBIENT_DIMS = {
    ActionClass.R1: 2, ActionClass.M1: 2, ActionClass.W1: 2,
    ActionClass.SO11: 2,
    ActionClass.R2: 3, ActionClass.M2: 3, ActionClass.W2: 3,
    ActionClass.KxRe3: 3, ActionClass.AxRe1: 3, ActionClass.NxEll: 3,
    ActionClass.N1xEll: 3, ActionClass.ALambdaEll: 3, ActionClass.SO21: 3,
    ActionClass.AN: 3,
}

TRANSLATION_CLASSES = frozenset([
    ActionClass.R1, ActionClass.M1, ActionClass.W1,
    ActionClass.R2, ActionClass.M2, ActionClass.W2,
])

# Short descriptions for the catalog table.
DESCRIPTIONS = {
    ActionClass.R1: "translations along a space-like line",
    ActionClass.M1: "translations along a time-like line",
    ActionClass.W1: "translations along a light-like line",
    ActionClass.SO11: "restricted Lorentz group SO°(1,1)",
    ActionClass.R2: "translations of a Euclidean plane",
    ActionClass.M2: "translations of a Minkowski plane",
    ActionClass.W2: "translations of a degenerate plane",
    ActionClass.KxRe3: "rotations about the e3 axis with e3 translations",
    ActionClass.AxRe1: "boosts in the e2,e3 plane with e1 translations",
    ActionClass.NxEll: "null rotations with translations along l",
    ActionClass.N1xEll: "screw null rotations N_1 with translations "
                        "along l",
    ActionClass.ALambdaEll: "screw boosts A_lambda semidirect l",
    ActionClass.SO21: "restricted Lorentz group SO°(2,1)",
    ActionClass.AN: "solvable Iwasawa group AN",
    ActionClass.SOn1: "restricted Lorentz group SO°(n,1)",
    ActionClass.KprimeAN: "K'AN with K' inside the parabolic K_0",
}


@enum.unique
class KPrimeKind(enum.Enum):
    trivial = "Trivial"
    full = "Full"
    block = "Block"


@attr.s(frozen=True)
class KPrime(object):
    """ A closed subgroup K' of K_0 = SO_{n-1}.

    `block` is SO_m acting on the first m coordinates, 2 <= m < n - 1.
    """
    kind = attr.ib(validator=attr.validators.instance_of(KPrimeKind))
    m = attr.ib(default=None)

    @m.validator
    def _check_m(self, attribute, value):
        if self.kind is KPrimeKind.block:
            if not isinstance(value, int) or value < 2:
                raise ValueError(
                    "Block K' needs an integer size m >= 2, got {0!r}"
                    .format(value))
        elif value is not None:
            raise ValueError("Only block K' carries a size")

    @classmethod
    def trivial(cls):
        return cls(KPrimeKind.trivial)

    @classmethod
    def full(cls):
        return cls(KPrimeKind.full)

    @classmethod
    def block(cls, m):
        return cls(KPrimeKind.block, m)

    @classmethod
    def from_string(cls, value):
        """ Parse 'Trivial', 'Full' or 'Block(m)'. """
        text = value.strip()
        lowered = text.lower()
        if lowered == "trivial":
            return cls.trivial()
        if lowered == "full":
            return cls.full()
        if lowered.startswith("block(") and lowered.endswith(")"):
            try:
                return cls.block(int(text[6:-1]))
            except ValueError:
                pass
        raise ValueError("Invalid K' specification {0!r}".format(value))

    def generators(self, n):
        """ so(n,1) generators of the Lie algebra of K'. """
        if self.kind is KPrimeKind.trivial:
            return ()
        basis = iwasawa_generators(n)
        if self.kind is KPrimeKind.full:
            return basis.k0_gens
        if not self.m < n - 1:
            raise UnsupportedAction(
                "Block K' needs m < n - 1 = {0}, got m = {1}".format(
                    n - 1, self.m))
        size = n + 1
        gens = []
        for i, j in itertools.combinations(range(self.m), 2):
            x = np.zeros((size, size))
            x[j, i], x[i, j] = 1.0, -1.0
            gens.append(LieElement.rotation_like(x))
        return tuple(gens)

    def __str__(self):
        if self.kind is KPrimeKind.block:
            return "Block({0})".format(self.m)
        return self.kind.value


def _as_optional_float(value):
    return None if value is None else float(value)


@attr.s(frozen=True)
class ActionSpec(object):
    """ A catalog action together with its canonical generators.

    Build instances with `make_spec`, which fills in the generators.
    """
    action_class = attr.ib(validator=attr.validators.instance_of(ActionClass))
    ambient_dim = attr.ib(validator=attr.validators.instance_of(int))
    lam = attr.ib(default=None, converter=_as_optional_float)
    kprime = attr.ib(
        default=None,
        validator=attr.validators.optional(attr.validators.instance_of(KPrime))
    )
    generators = attr.ib(default=None, eq=False, repr=False)

    @property
    def n(self):
        return self.ambient_dim - 1

    @property
    def group_dim(self):
        return self.generators.dim

    @property
    def name(self):
        if self.action_class is ActionClass.KprimeAN:
            return "KprimeAN({0}, {1})".format(self.n, self.kprime)
        if self.action_class is ActionClass.ALambdaEll:
            return "ALambdaEll({0:g})".format(self.lam)
        if self.action_class is ActionClass.N1xEll and self.lam != 1.0:
            return "N1xEll(lambda={0:g})".format(self.lam)
        return self.action_class.value

    def __str__(self):
        return self.name


def _translations(vectors):
    return [LieElement.translation(v) for v in vectors]


def _canonical_generators(action_class, ambient_dim, lam, kprime):
    rot = LieElement.rotation_like
    d = ambient_dim
    e = [None] + [basis_vector(i, d) for i in range(1, d + 1)]

    if action_class is ActionClass.R1:
        return _translations([e[1]])
    elif action_class is ActionClass.M1:
        return _translations([e[2]])
    elif action_class is ActionClass.W1:
        return _translations([w0(2)])
    elif action_class is ActionClass.SO11:
        return [rot(Y_SO11)]
    elif action_class is ActionClass.R2:
        return _translations([e[1], e[2]])
    elif action_class is ActionClass.M2:
        return _translations([e[2], e[3]])
    elif action_class is ActionClass.W2:
        return _translations([e[1], w0(3)])
    elif action_class is ActionClass.KxRe3:
        return [rot(Y_K), LieElement.translation(e[3])]
    elif action_class is ActionClass.AxRe1:
        return [rot(Y_A), LieElement.translation(e[1])]
    elif action_class in (ActionClass.NxEll, ActionClass.N1xEll):
        return [LieElement(Y_N, lam * e[3]), LieElement.translation(w0(3))]
    elif action_class is ActionClass.ALambdaEll:
        return [LieElement(Y_A, lam * e[1]), LieElement.translation(w0(3))]
    elif action_class is ActionClass.SO21:
        return list(iwasawa_generators(2).algebra)
    elif action_class is ActionClass.AN:
        basis = iwasawa_generators(2)
        return [basis.a_gen] + list(basis.n_gens)
    elif action_class is ActionClass.SOn1:
        return list(iwasawa_generators(d - 1).algebra)
    elif action_class is ActionClass.KprimeAN:
        basis = iwasawa_generators(d - 1)
        return (list(kprime.generators(d - 1)) + [basis.a_gen]
                + list(basis.n_gens))
    raise UnsupportedAction(action_class)


def make_spec(action_class, ambient_dim=None, lam=None, kprime=None):
    """ Build the catalog action `action_class` on M^{ambient_dim}.

    Parameters
    ----------
    action_class : ActionClass or str
    ambient_dim : int, optional
        Only needed for SOn1 and KprimeAN, which live on M^{n+1}, n >= 3.
    lam : float, optional
        λ >= 0 for ALambdaEll (default 1), λ > 0 for N1xEll (default 1).
    kprime : KPrime, optional
        The subgroup K' for KprimeAN (default: trivial).
    """
    if not isinstance(action_class, ActionClass):
        action_class = ActionClass.from_string(action_class)

    fixed = _AMBIENT_DIMS.get(action_class)
    if fixed is not None:
        if ambient_dim is not None and ambient_dim != fixed:
            raise UnsupportedAction(
                "{0} acts on M^{1}, not on M^{2}".format(
                    action_class.value, fixed, ambient_dim))
        ambient_dim = fixed
    elif ambient_dim is None or ambient_dim < 4:
        raise UnsupportedAction(
            "{0} needs an ambient dimension >= 4, got {1!r}".format(
                action_class.value, ambient_dim))

    if action_class is ActionClass.ALambdaEll:
        lam = 1.0 if lam is None else float(lam)
        if not lam >= 0:
            raise ValueError(
                "ALambdaEll needs lambda >= 0 (reflect e1 for lambda < 0), "
                "got {0!r}".format(lam))
    elif action_class is ActionClass.N1xEll:
        lam = 1.0 if lam is None else float(lam)
        if not lam > 0:
            raise ValueError(
                "N1xEll needs lambda > 0, got {0!r}".format(lam))
    elif action_class is ActionClass.NxEll:
        lam = 0.0
    elif lam is not None:
        raise ValueError("{0} takes no lambda".format(action_class.value))

    if action_class is ActionClass.KprimeAN:
        kprime = KPrime.trivial() if kprime is None else kprime
    elif kprime is not None:
        raise ValueError("{0} takes no K'".format(action_class.value))

    generators = Subalgebra(
        _canonical_generators(action_class, ambient_dim, lam, kprime),
        ambient_dim)
    return ActionSpec(action_class, ambient_dim, lam, kprime, generators)


def catalog_list(ambient_dim, lambdas=DEFAULT_LAMBDAS):
    """ The catalog of cohomogeneity-one actions on M^{ambient_dim}.

    On M^3 the ALambdaEll family is sampled at `lambdas`; on M^{n+1}, n >= 3,
    K' runs over the trivial group, the full K_0 and every admissible block.
    """
    if ambient_dim < 2:
        raise ValueError(
            "Minkowski space needs dimension >= 2, got {0}".format(
                ambient_dim))
    if ambient_dim in (2, 3):
        specs = []
        for action_class, dim in _AMBIENT_DIMS.items():
            if dim != ambient_dim:
                continue
            if action_class is ActionClass.ALambdaEll:
                specs.extend(make_spec(action_class, lam=lam)
                             for lam in lambdas)
            else:
                specs.append(make_spec(action_class))
        return specs

    n = ambient_dim - 1
    kprimes = [KPrime.trivial(), KPrime.full()]
    kprimes.extend(KPrime.block(m) for m in range(2, n - 1))
    specs = [make_spec(ActionClass.SOn1, ambient_dim)]
    specs.extend(make_spec(ActionClass.KprimeAN, ambient_dim, kprime=k)
                 for k in kprimes)
    return specs


def group_element(spec, params):
    """ The group element of `spec` with the given parameters.

    The screw families use their closed forms: for ALambdaEll, (t, s) gives
    g_{t,s} = (a_t, (λt, s, -s)); for NxEll and N1xEll, (t, s) gives
    h_{t,s} = (n_t, (λt²/2, s - λt³/6, λt + λt³/6 - s)). Other groups use
    coordinates of the second kind, Exp(p_k X_k) ... Exp(p_1 X_1) for the
    generators X_1, ..., X_k in catalog order.
    """
    params = np.atleast_1d(np.asarray(params, dtype=float))
    if params.shape != (spec.group_dim,):
        raise ValueError(
            "{0} has a {1}-dimensional group, got {2} parameters".format(
                spec.name, spec.group_dim, params.shape[0]))

    action_class = spec.action_class
    if action_class is ActionClass.ALambdaEll:
        t, s = params
        return IsoElement(boost_a(t), [spec.lam * t, s, -s])
    elif action_class in (ActionClass.NxEll, ActionClass.N1xEll):
        t, s = params
        lam = spec.lam
        return IsoElement(nilpotent_n([t]), [
            0.5 * lam * t ** 2,
            s - lam * t ** 3 / 6.0,
            lam * t + lam * t ** 3 / 6.0 - s,
        ])
    elif action_class in TRANSLATION_CLASSES:
        return IsoElement.translation(
            params.dot([g.trans for g in spec.generators]))

    element = IsoElement.identity(spec.ambient_dim)
    for value, generator in zip(params, spec.generators):
        element = exp_iso(generator, value) @ element
    return element
