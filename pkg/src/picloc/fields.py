"""Field models and structured cohomology values with a ``K*`` part.

A field model says how ``Hom(Z/d, K*) = mu_d(K)`` and
``Ext(Z/d, K*) = K*/(K*)^d`` look for a class of fields.  The pseudo-model
``CyclicCoefficients(m)`` evaluates the same functors for coefficients
``Z/m`` and is what the mod-m oracle compares against.
"""

from dataclasses import dataclass, field
from math import gcd

from .abelian import FgAbelianGroup
from .errors import ParseError, UnsupportedModel


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_power_base(q):
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return p if q == 1 else None


@dataclass(frozen=True)
class FieldModel:
    kind: str
    param: int = 0

    KINDS = ("finite", "algclosed0", "algclosedp", "reals", "rationals", "symbolic", "cyclic")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise UnsupportedModel(f"no table row for field model {self.kind!r}")

    @property
    def characteristic(self):
        if self.kind == "finite":
            return _prime_power_base(self.param)
        if self.kind == "algclosedp":
            return self.param
        if self.kind == "cyclic":
            return None
        return 0

    @property
    def formal(self):
        return self.kind == "symbolic"

    def kstar(self):
        """``K*`` as a finitely generated group, or None if it is not one."""
        if self.kind == "finite":
            return FgAbelianGroup.cyclic(self.param - 1)
        if self.kind == "cyclic":
            return FgAbelianGroup.cyclic(self.param)
        return None

    def mu(self, d):
        """Order of ``mu_d(K)``; None for the symbolic model."""
        k = self.kind
        if k == "symbolic":
            return None
        if k in ("finite", "cyclic"):
            return gcd(d, self.param - 1 if k == "finite" else self.param)
        if k == "algclosed0":
            return d
        if k == "algclosedp":
            while d % self.param == 0:
                d //= self.param
            return d
        return gcd(d, 2)

    def ext(self, d):
        """``K*/(K*)^d`` as (finite order, order of the infinitely repeated summand)."""
        k = self.kind
        if k == "symbolic":
            return None
        if k in ("finite", "cyclic"):
            return gcd(d, self.param - 1 if k == "finite" else self.param), 1
        if k in ("algclosed0", "algclosedp"):
            return 1, 1
        if k == "reals":
            return gcd(d, 2), 1
        return gcd(d, 2), d

    def label(self):
        return {
            "finite": f"F_{self.param}",
            "algclosed0": "algebraically closed, char 0",
            "algclosedp": f"algebraically closed, char {self.param}",
            "reals": "R",
            "rationals": "Q",
            "symbolic": "symbolic",
            "cyclic": f"Z/{self.param}",
        }[self.kind]

    def spec(self):
        return {
            "finite": f"q={self.param}",
            "algclosed0": "Qbar",
            "algclosedp": f"pbar={self.param}",
            "reals": "R",
            "rationals": "Q",
            "symbolic": "symbolic",
            "cyclic": f"m={self.param}",
        }[self.kind]


def FiniteField(q):
    if _prime_power_base(q) is None:
        raise UnsupportedModel(f"{q} is not a prime power")
    return FieldModel("finite", q)


def AlgClosedChar0():
    return FieldModel("algclosed0")


def AlgClosedCharP(p):
    if not _is_prime(p):
        raise UnsupportedModel(f"{p} is not a prime")
    return FieldModel("algclosedp", p)


def Reals():
    return FieldModel("reals")


def Rationals():
    return FieldModel("rationals")


def Symbolic():
    return FieldModel("symbolic")


def CyclicCoefficients(m):
    if m < 2:
        raise UnsupportedModel("cyclic coefficients need m >= 2")
    return FieldModel("cyclic", m)


def parse_field(text):
    """Parse ``q=<prime power> | Qbar | Cstar | R | Q | symbolic | pbar=<p> | m=<int>``."""
    t = text.strip()
    key, _, val = t.partition("=")
    try:
        if key == "q":
            return FiniteField(int(val))
        if key == "pbar":
            return AlgClosedCharP(int(val))
        if key == "m":
            return CyclicCoefficients(int(val))
    except ValueError as exc:
        raise ParseError(f"bad field specification {text!r}") from exc
    simple = {"Qbar": AlgClosedChar0, "Cstar": AlgClosedChar0, "C": AlgClosedChar0,
              "R": Reals, "Q": Rationals, "symbolic": Symbolic}
    if t in simple:
        return simple[t]()
    raise ParseError(f"unknown field specification {text!r}")


@dataclass(frozen=True)
class GroupValue:
    """``integral + (K*)^kstar_copies + mu pieces + ext pieces``.

    For concrete models ``mu`` and ``ext`` hold the evaluated cyclic orders
    (trivial ones dropped) and ``infinite`` the orders ``d`` of summands
    ``(Z/d)`` occurring countably infinitely often.  For the symbolic model
    they hold the formal ``d`` of ``mu_d(K)`` and ``K*/(K*)^d``.
    """

    model: FieldModel
    integral: FgAbelianGroup = field(default_factory=FgAbelianGroup.zero)
    kstar_copies: int = 0
    mu: tuple = ()
    ext: tuple = ()
    infinite: tuple = ()

    @classmethod
    def from_uct(cls, h, source, model):
        """``Hom(h, K*) + Ext(source, K*)``."""
        if not isinstance(model, FieldModel):
            raise UnsupportedModel(f"no table row for {model!r}")
        if model.formal:
            return cls(model, FgAbelianGroup.zero(), h.free_rank,
                       tuple(h.invariant_factors), tuple(source.invariant_factors), ())
        mu = tuple(o for o in (model.mu(d) for d in h.invariant_factors) if o > 1)
        ext, inf = [], []
        for d in source.invariant_factors:
            fin, rep = model.ext(d)
            if fin > 1:
                ext.append(fin)
            if rep > 1:
                inf.append(rep)
        return cls(model, FgAbelianGroup.zero(), h.free_rank, mu, tuple(ext), tuple(inf))

    @classmethod
    def of_group(cls, model, group):
        return cls(model, group)

    @property
    def infinite_ext(self):
        return bool(self.infinite)

    @property
    def formal(self):
        return self.model.formal

    def is_concrete(self):
        if self.formal:
            return not (self.kstar_copies or self.mu or self.ext)
        return not self.infinite and (not self.kstar_copies or self.model.kstar() is not None)

    def known_part(self):
        """The finitely generated part that the model pins down."""
        g = self.integral
        if self.formal:
            return g
        g = g + FgAbelianGroup.from_orders(0, self.mu + self.ext)
        ks = self.model.kstar()
        if ks is not None:
            for _ in range(self.kstar_copies):
                g = g + ks
        return g

    def concrete(self):
        """The whole value as an FgAbelianGroup, or None if some part is not
        finitely generated or only formal."""
        return self.known_part() if self.is_concrete() else None

    def is_zero(self):
        return self.integral.is_zero() and not (self.kstar_copies or self.mu or self.ext
                                                or self.infinite)

    def __add__(self, other):
        if self.model != other.model:
            raise ValueError("cannot add values under different field models")
        return GroupValue(self.model, self.integral + other.integral,
                          self.kstar_copies + other.kstar_copies,
                          tuple(sorted(self.mu + other.mu)), tuple(sorted(self.ext + other.ext)),
                          tuple(sorted(self.infinite + other.infinite)))

    def __str__(self):
        c = self.concrete()
        if c is not None:
            return str(c)
        parts = [] if self.integral.is_zero() else [str(self.integral)]
        if self.kstar_copies:
            parts.append("K*" if self.kstar_copies == 1 else f"(K*)^{self.kstar_copies}")
        if self.formal:
            parts += [f"mu_{d}(K)" for d in self.mu]
            parts += [f"K*/(K*)^{d}" for d in self.ext]
        else:
            parts += [f"Z/{d}" for d in self.mu + self.ext]
            parts += [f"(Z/{d})^(countable)" for d in self.infinite]
        return " + ".join(parts) if parts else "0"

    def to_dict(self):
        return {"model": self.model.spec(), "kstar_copies": self.kstar_copies,
                "mu": list(self.mu), "ext": list(self.ext),
                "infinite_ext": self.infinite_ext, "infinite": list(self.infinite),
                "integral": self.integral.to_dict()}

    @classmethod
    def from_dict(cls, d):
        return cls(parse_field(d["model"]), FgAbelianGroup.from_dict(d["integral"]),
                   d["kstar_copies"], tuple(d["mu"]), tuple(d["ext"]), tuple(d["infinite"]))
