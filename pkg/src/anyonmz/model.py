"""Anyon-model data and derived spectral quantities.

An :class:`AnyonModel` holds the defining data of a (multiplicity-free,
unitary, modular) anyon model -- charge labels, fusion rules, F-symbols
and R-symbols -- and everything the interferometry formulas consume is
derived from it at load time:

* quantum dimensions ``d_a`` (Perron-Frobenius eigenvalues of the fusion
  matrices) and the total dimension ``D = sqrt(sum d_a^2)``,
* topological spins ``theta_a = d_a^{-1} sum_c d_c R^{aa}_c``,
* the S-matrix ``S_ab = D^{-1} sum_c N^c_{ab} d_c theta_c / (theta_a theta_b)``,
* the monodromy matrix ``M_ab = S_ab S_00 / (S_0a S_0b)``,
* loop coefficient rows: ``omega`` coefficients ``sum_{a in B} S_0a S*_ax``
  and twist-loop coefficients ``[S T^m S^dagger]_{0x}``.

Pentagon and hexagon equations are verified exhaustively at load time;
models that fail are rejected.  The S-matrix must be unitary (modular).

Model definitions are plain text with sections ``[charges]``, ``[fusion]``,
``[F]`` and ``[R]``; see ``data/ising.anyon`` or the README for the exact
grammar.  Symbols omitted from the tables are trivial (equal to one when
admissible), matching the usual convention for published model tables.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import (
    InconsistentData,
    InvalidDistribution,
    MultiplicityUnsupported,
    NonModular,
    ParseError,
    UnknownCharge,
)

ATOL = 1e-10
_VERIFY_TOL = 1e-9


@dataclass(frozen=True)
class ChargeLabel:
    """A topological charge: an opaque id plus its conjugate's id."""

    id: str
    conjugate: str

    def __str__(self) -> str:
        return self.id


# ---------------------------------------------------------------------------
# complex literal grammar: "re", "re+im i", "re-im i", "exp(i*p/q*pi)",
# optionally negated, e.g. "-exp(i*3/8*pi)".  Whitespace is ignored.
# ---------------------------------------------------------------------------

_EXP_RE = re.compile(r"^(-?)exp\((-?)i\*(-?\d+)/(\d+)\*pi\)$")
_FLOAT = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_COMPLEX_RE = re.compile(rf"^({_FLOAT})(?:([-+])({_FLOAT.lstrip('[-+]?')}|{_FLOAT})i)?$")


def parse_complex(token: str) -> complex:
    """Parse a complex literal in the model-file grammar."""
    s = token.replace(" ", "")
    m = _EXP_RE.match(s)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        p, q = int(m.group(3)), int(m.group(4))
        if m.group(2) == "-":
            p = -p
        if q == 0:
            raise ParseError(f"zero denominator in {token!r}")
        return sign * cmath.exp(1j * math.pi * p / q)
    # pure imaginary shorthand like "1i" / "-0.5i"
    if s.endswith("i") and not s.endswith("pi)"):
        body = s[:-1]
        # split into real and imaginary parts at the last top-level +/-
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE":
                re_part, im_part = body[:k], body[k:]
                try:
                    return complex(float(re_part), float(im_part))
                except ValueError as exc:
                    raise ParseError(f"bad complex literal {token!r}") from exc
        try:
            return complex(0.0, float(body))
        except ValueError as exc:
            raise ParseError(f"bad complex literal {token!r}") from exc
    try:
        return complex(float(s), 0.0)
    except ValueError as exc:
        raise ParseError(f"bad complex literal {token!r}") from exc


def format_complex(z: complex) -> str:
    """Render a complex number in the "re+im i" grammar with 17 digits."""
    re_s = repr(float(z.real))
    im = float(z.imag)
    sign = "+" if im >= 0 else "-"
    return f"{re_s}{sign}{abs(im)!r}i"


# ---------------------------------------------------------------------------
# model definition parser
# ---------------------------------------------------------------------------

_F_KEY_RE = re.compile(r"^F\[([^;\]]+);([^\]]+)\]\(([^)]+)\)$")
_R_KEY_RE = re.compile(r"^R\[([^;\]]+);([^\]]+)\]$")
_SECTIONS = ("charges", "fusion", "F", "R")


def _parse_sections(text: str) -> dict[str, list[str]]:
    sections: dict[str, list[str]] = {}
    current: str | None = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise ParseError(f"unknown section [{name}]")
            if name in sections:
                raise ParseError(f"duplicate section [{name}]")
            sections[name] = []
            current = name
            continue
        if current is None:
            raise ParseError(f"content before first section: {line!r}")
        sections[current].append(line)
    for required in ("charges", "fusion"):
        if required not in sections:
            raise ParseError(f"missing [{required}] section")
    return sections


def load_model_text(text: str, name: str = "custom") -> "AnyonModel":
    """Parse a model definition and return the verified model."""
    sections = _parse_sections(text)

    charges: list[str] = []
    conj: dict[str, str] = {}
    vacuum: str | None = None
    for line in sections["charges"]:
        if "=" in line and line.split("=", 1)[0].strip() == "vacuum":
            vacuum = line.split("=", 1)[1].strip()
            continue
        m = re.match(r"^(\S+)\s+conj\s*=\s*(\S+)$", line)
        if not m:
            raise ParseError(f"bad charge line: {line!r}")
        label, cj = m.group(1), m.group(2)
        if label in conj:
            raise ParseError(f"duplicate charge {label!r}")
        charges.append(label)
        conj[label] = cj
    if vacuum is None:
        raise ParseError("no 'vacuum =' line in [charges]")
    if vacuum not in conj:
        raise ParseError(f"vacuum {vacuum!r} not declared as a charge")
    for a, ab in conj.items():
        if ab not in conj:
            raise ParseError(f"conjugate {ab!r} of {a!r} not declared")
        if conj[ab] != a:
            raise InconsistentData(f"conjugation is not an involution at {a!r}")
    if conj[vacuum] != vacuum:
        raise InconsistentData("vacuum must be self-conjugate")

    # fusion table: explicit products, then vacuum rules and symmetry
    fusion: dict[tuple[str, str], tuple[str, ...]] = {}
    for line in sections["fusion"]:
        m = re.match(r"^(\S+)\s+x\s+(\S+)\s*=\s*(.+)$", line)
        if not m:
            raise ParseError(f"bad fusion line: {line!r}")
        a, b = m.group(1), m.group(2)
        outs = tuple(t.strip() for t in m.group(3).split("+"))
        for t in (a, b, *outs):
            if t not in conj:
                raise UnknownCharge(t)
        if len(set(outs)) != len(outs):
            raise MultiplicityUnsupported(f"{a} x {b} lists a channel twice")
        for key in ((a, b), (b, a)):
            if key in fusion and set(fusion[key]) != set(outs):
                raise InconsistentData(f"conflicting products for {key}")
            fusion[key] = outs
    for a in charges:
        fusion[(vacuum, a)] = (a,)
        fusion[(a, vacuum)] = (a,)
    for a in charges:
        for b in charges:
            if (a, b) not in fusion:
                raise ParseError(f"missing fusion product {a} x {b}")

    f_table: dict[tuple[str, str, str, str], dict[tuple[str, str], complex]] = {}
    for line in sections.get("F", []):
        key, _, val = line.partition("=")
        m = _F_KEY_RE.match(key.strip())
        if not m:
            raise ParseError(f"bad F line: {line!r}")
        abc = tuple(t.strip() for t in m.group(1).split(","))
        if len(abc) != 3:
            raise ParseError(f"F needs three upper labels: {line!r}")
        d = m.group(2).strip()
        ef = tuple(t.strip() for t in m.group(3).split(","))
        if len(ef) != 2:
            raise ParseError(f"F needs two channel labels: {line!r}")
        for t in (*abc, d, *ef):
            if t not in conj:
                raise UnknownCharge(t)
        f_table.setdefault((*abc, d), {})[(ef[0], ef[1])] = parse_complex(val)

    r_table: dict[tuple[str, str, str], complex] = {}
    for line in sections.get("R", []):
        key, _, val = line.partition("=")
        m = _R_KEY_RE.match(key.strip())
        if not m:
            raise ParseError(f"bad R line: {line!r}")
        ab = tuple(t.strip() for t in m.group(1).split(","))
        if len(ab) != 2:
            raise ParseError(f"R needs two upper labels: {line!r}")
        c = m.group(2).strip()
        for t in (*ab, c):
            if t not in conj:
                raise UnknownCharge(t)
        r_table[(ab[0], ab[1], c)] = parse_complex(val)

    return AnyonModel._build(name, charges, vacuum, conj, fusion, f_table, r_table)


# ---------------------------------------------------------------------------
# the model object
# ---------------------------------------------------------------------------


@dataclass
class AnyonModel:
    """A verified multiplicity-free modular anyon model."""

    name: str
    charges: list[str]
    vacuum: str
    _conj: dict[str, str]
    _fusion: dict[tuple[str, str], tuple[str, ...]]
    _f_table: dict[tuple[str, str, str, str], dict[tuple[str, str], complex]]
    _r_table: dict[tuple[str, str, str], complex]
    _d: dict[str, float] = field(default_factory=dict)
    _theta: dict[str, complex] = field(default_factory=dict)
    total_dim: float = 0.0
    s_matrix: np.ndarray = field(default_factory=lambda: np.zeros((0, 0), complex))
    _index: dict[str, int] = field(default_factory=dict)
    _caches: dict = field(default_factory=dict, repr=False)

    # -- construction -------------------------------------------------------

    @classmethod
    def _build(cls, name, charges, vacuum, conj, fusion, f_table, r_table):
        model = cls(name, list(charges), vacuum, conj, fusion, f_table, r_table)
        model._index = {a: i for i, a in enumerate(charges)}
        model._check_fusion_ring()
        model._derive_dims()
        model._derive_theta()
        model._derive_s()
        model._verify_pentagon()
        model._verify_hexagon()
        model._verify_ribbon()
        return model

    def _check_fusion_ring(self):
        vac = self.vacuum
        for a in self.charges:
            ab = self._conj[a]
            if self._fusion[(a, vac)] != (a,):
                raise InconsistentData(f"vacuum fusion broken at {a}")
            vac_count = sum(1 for c in self._fusion[(a, ab)] if c == vac)
            if vac_count != 1:
                raise InconsistentData(f"{a} x {ab} must contain the vacuum once")
            for b in self.charges:
                if b != ab and vac in self._fusion[(a, b)]:
                    raise InconsistentData(f"vacuum in {a} x {b} but {b} != conj({a})")
        # associativity of the fusion ring
        for a in self.charges:
            for b in self.charges:
                for c in self.charges:
                    for d in self.charges:
                        lhs = sum(
                            self.N(a, b, e) * self.N(e, c, d) for e in self.charges
                        )
                        rhs = sum(
                            self.N(b, c, f) * self.N(a, f, d) for f in self.charges
                        )
                        if lhs != rhs:
                            raise InconsistentData(
                                f"fusion not associative at ({a},{b},{c};{d})"
                            )

    def _derive_dims(self):
        n = len(self.charges)
        for a in self.charges:
            na = np.zeros((n, n))
            for b in self.charges:
                for c in self._fusion[(a, b)]:
                    na[self._index[b], self._index[c]] = 1.0
            eigs = np.linalg.eigvals(na)
            self._d[a] = float(max(eigs.real))
        self.total_dim = math.sqrt(sum(d * d for d in self._d.values()))
        # Frobenius-Perron consistency
        for a in self.charges:
            for b in self.charges:
                lhs = self._d[a] * self._d[b]
                rhs = sum(self._d[c] for c in self._fusion[(a, b)])
                if abs(lhs - rhs) > 1e-6 * max(1.0, lhs):
                    raise InconsistentData(f"quantum dimensions inconsistent at {a},{b}")

    def _derive_theta(self):
        for a in self.charges:
            tot = sum(self._d[c] * self.R(a, a, c) for c in self._fusion[(a, a)])
            th = tot / self._d[a]
            if abs(abs(th) - 1.0) > 1e-12:
                raise InconsistentData(f"|theta_{a}| != 1 (got {abs(th):.3e} off)")
            self._theta[a] = th
        for a in self.charges:
            if abs(self._theta[a] - self._theta[self._conj[a]]) > 1e-10:
                raise InconsistentData(f"theta_{a} != theta of conjugate")

    def _derive_s(self):
        n = len(self.charges)
        s = np.zeros((n, n), complex)
        for a in self.charges:
            for b in self.charges:
                tot = 0.0 + 0.0j
                for c in self._fusion[(a, b)]:
                    tot += self._d[c] * self._theta[c]
                s[self._index[a], self._index[b]] = tot / (
                    self.total_dim * self._theta[a] * self._theta[b]
                )
        self.s_matrix = s
        if not np.allclose(s @ s.conj().T, np.eye(n), atol=1e-10):
            raise NonModular(f"S-matrix of {self.name!r} is not unitary")
        srow = s[self._index[self.vacuum]].real
        if not (srow > 0).all():
            raise NonModular("vacuum row of S is not strictly positive")

    def _verify_pentagon(self):
        ch = self.charges
        for a in ch:
            for b in ch:
                for c in ch:
                    for d in ch:
                        for e in ch:
                            self._pentagon_at(a, b, c, d, e)

    def _pentagon_at(self, a, b, c, d, e):
        for f in self._fusion[(a, b)]:
            for g in self._fusion[(f, c)]:
                if self.N(g, d, e) == 0:
                    continue
                for l in self._fusion[(c, d)]:
                    for k in self._fusion[(b, l)]:
                        if self.N(a, k, e) == 0:
                            continue
                        lhs = self.F(f, c, d, e, g, l) * self.F(a, b, l, e, f, k)
                        rhs = sum(
                            self.F(a, b, c, g, f, h)
                            * self.F(a, h, d, e, g, k)
                            * self.F(b, c, d, k, h, l)
                            for h in self._fusion[(b, c)]
                        )
                        if abs(lhs - rhs) > _VERIFY_TOL:
                            raise InconsistentData(
                                f"pentagon fails at ({a},{b},{c},{d};{e}): "
                                f"{lhs} vs {rhs}"
                            )

    def _verify_hexagon(self):
        ch = self.charges
        for a in ch:
            for b in ch:
                for c in ch:
                    for d in ch:
                        self._hexagon_at(a, b, c, d, +1)
                        self._hexagon_at(a, b, c, d, -1)

    def _hexagon_at(self, a, b, c, d, sign):
        def rr(x, y, z):
            val = self.R(x, y, z)
            return val if sign > 0 else 1.0 / val

        for e in self._fusion[(a, c)]:
            if self.N(e, b, d) == 0:
                continue
            for g in self._fusion[(c, b)]:
                if self.N(a, g, d) == 0:
                    continue
                lhs = rr(c, a, e) * self.F(a, c, b, d, e, g) * rr(c, b, g)
                rhs = sum(
                    self.F(c, a, b, d, e, f) * rr(c, f, d) * self.F(a, b, c, d, f, g)
                    for f in self._fusion[(a, b)]
                    if self.N(f, c, d)
                )
                if abs(lhs - rhs) > _VERIFY_TOL:
                    raise InconsistentData(
                        f"hexagon({'+' if sign > 0 else '-'}) fails at "
                        f"({a},{b},{c};{d}): {lhs} vs {rhs}"
                    )

    def _verify_ribbon(self):
        # monodromy in a definite channel: R^{ba}_c R^{ab}_c = theta_c/(theta_a theta_b)
        for a in self.charges:
            for b in self.charges:
                for c in self._fusion[(a, b)]:
                    lhs = self.R(b, a, c) * self.R(a, b, c)
                    rhs = self._theta[c] / (self._theta[a] * self._theta[b])
                    if abs(lhs - rhs) > _VERIFY_TOL:
                        raise InconsistentData(
                            f"ribbon property fails at ({a},{b};{c}): {lhs} vs {rhs}"
                        )

    # -- basic queries -------------------------------------------------------

    def charge(self, label: str) -> ChargeLabel:
        self._require(label)
        return ChargeLabel(label, self._conj[label])

    def _require(self, *labels: str):
        for label in labels:
            if label not in self._index:
                raise UnknownCharge(label)

    def conj(self, a: str) -> str:
        self._require(a)
        return self._conj[a]

    def fusion_outcomes(self, a: str, b: str) -> tuple[str, ...]:
        self._require(a, b)
        return self._fusion[(a, b)]

    def N(self, a: str, b: str, c: str) -> int:
        return 1 if c in self._fusion[(a, b)] else 0

    def d(self, a: str) -> float:
        self._require(a)
        return self._d[a]

    def theta(self, a: str) -> complex:
        self._require(a)
        return self._theta[a]

    def derive_spins(self) -> dict[str, complex]:
        """Topological spins theta_a = d_a^{-1} sum_c d_c R^{aa}_c."""
        return dict(self._theta)

    @property
    def t_matrix(self) -> np.ndarray:
        return np.diag([self._theta[a] for a in self.charges])

    def S(self, a: str, b: str) -> complex:
        self._require(a, b)
        return complex(self.s_matrix[self._index[a], self._index[b]])

    def M(self, a: str, b: str) -> complex:
        """Monodromy matrix element M_ab = S_ab S_00 / (S_0a S_0b)."""
        self._require(a, b)
        i, j, v = self._index[a], self._index[b], self._index[self.vacuum]
        s = self.s_matrix
        return complex(s[i, j] * s[v, v] / (s[v, i] * s[v, j]))

    @property
    def monodromy(self) -> np.ndarray:
        n = len(self.charges)
        out = np.zeros((n, n), complex)
        for i, a in enumerate(self.charges):
            for j, b in enumerate(self.charges):
                out[i, j] = self.M(a, b)
        return out

    def F(self, a: str, b: str, c: str, d: str, e: str, f: str) -> complex:
        """F-symbol [F^{abc}_d]_{ef}; trivial symbols default to one."""
        if not (
            self.N(a, b, e) and self.N(e, c, d) and self.N(b, c, f) and self.N(a, f, d)
        ):
            return 0.0
        entry = self._f_table.get((a, b, c, d))
        if entry is not None and (e, f) in entry:
            return entry[(e, f)]
        return 1.0 + 0.0j

    def F_matrix(self, a: str, b: str, c: str, d: str):
        """The unitary F-matrix as (rows e, cols f, ndarray)."""
        key = ("Fmat", a, b, c, d)
        if key not in self._caches:
            rows = [e for e in self._fusion[(a, b)] if self.N(e, c, d)]
            cols = [f for f in self._fusion[(b, c)] if self.N(a, f, d)]
            mat = np.array(
                [[self.F(a, b, c, d, e, f) for f in cols] for e in rows], complex
            )
            self._caches[key] = (rows, cols, mat)
        return self._caches[key]

    def R(self, a: str, b: str, c: str) -> complex:
        """R-symbol R^{ab}_c; trivial symbols default to one."""
        if not self.N(a, b, c):
            return 0.0
        return self._r_table.get((a, b, c), 1.0 + 0.0j)

    # -- spectral maps used by the interferometry formulas -------------------

    def monodromy_expectation(self, probe_dist: dict[str, float]) -> dict[str, complex]:
        """M_{aB} = sum_b Pr_B(b) M_ab for every charge a."""
        self._validate_distribution(probe_dist)
        return {
            a: sum(p * self.M(a, b) for b, p in probe_dist.items())
            for a in self.charges
        }

    def _validate_distribution(self, dist: dict[str, float]):
        self._require(*dist.keys())
        total = 0.0
        for p in dist.values():
            if p < -1e-12:
                raise InvalidDistribution("negative probability")
            total += p
        if abs(total - 1.0) > 1e-12:
            raise InvalidDistribution(f"probabilities sum to {total}, not 1")

    def omega_coefficients(self, charge_set) -> dict[str, complex]:
        """Loop weights sum_{a in set} S_0a S*_ax for each loop label x."""
        charge_set = set(charge_set)
        if not charge_set:
            raise UnknownCharge("empty charge set")
        self._require(*charge_set)
        v = self._index[self.vacuum]
        out: dict[str, complex] = {}
        for x in self.charges:
            j = self._index[x]
            out[x] = sum(
                self.s_matrix[v, self._index[a]]
                * np.conj(self.s_matrix[self._index[a], j])
                for a in charge_set
            )
        return out

    def tau_coefficients(self, m: int) -> dict[str, complex]:
        """Twist-loop weights [S T^m S^dagger]_{0x} (any integer m)."""
        v = self._index[self.vacuum]
        out: dict[str, complex] = {}
        for x in self.charges:
            j = self._index[x]
            out[x] = sum(
                self._theta[a] ** m
                * self.s_matrix[v, self._index[a]]
                * np.conj(self.s_matrix[self._index[a], j])
                for a in self.charges
            )
        return out

    def st_m_sdag(self, m: int) -> np.ndarray:
        """The full matrix S T^m S^dagger."""
        return self.s_matrix @ np.diag(
            [self._theta[a] ** m for a in self.charges]
        ) @ self.s_matrix.conj().T


# ---------------------------------------------------------------------------
# Z2-graded data (matrix queries only; no F/R tables)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Z2GradedModel:
    """Z2-graded modular data for a fermionic Ising-type phase.

    Charges come in doublets related by fusion with the fermion; only the
    graded S-matrix and T^2 are defined, so this object supports matrix
    queries but cannot drive interferometry runs.
    """

    name: str
    doublets: tuple[tuple[str, str], ...]
    s_matrix: np.ndarray
    t_squared: np.ndarray

    def __post_init__(self):
        n = self.s_matrix.shape[0]
        if not np.allclose(
            self.s_matrix @ self.s_matrix.conj().T, np.eye(n), atol=1e-12
        ):
            raise NonModular("graded S-matrix is not unitary")
        if not np.allclose(np.abs(np.diag(self.t_squared)), 1.0, atol=1e-12):
            raise InconsistentData("graded T^2 entries must be unit modulus")


def mr_half_graded() -> Z2GradedModel:
    """Z2-graded S and T^2 of the fermionic Moore-Read phase at half filling."""
    r2 = math.sqrt(2.0)
    s = np.array(
        [
            [1, 1, r2, 1, 1, r2],
            [1, 1, -r2, 1, 1, -r2],
            [r2, -r2, 0, 1j * r2, -1j * r2, 0],
            [1, 1, 1j * r2, -1, -1, -1j * r2],
            [1, 1, -1j * r2, -1, -1, 1j * r2],
            [r2, -r2, 0, -1j * r2, 1j * r2, 0],
        ],
        complex,
    ) / math.sqrt(8.0)
    t2 = np.diag([1, 1, 1j, -1, -1, 1j]).astype(complex)
    doublets = (
        ("I_0", "psi_2"),
        ("psi_0", "I_2"),
        ("sigma_1/2", "sigma_5/2"),
        ("I_1", "psi_3"),
        ("psi_1", "I_3"),
        ("sigma_3/2", "sigma_7/2"),
    )
    return Z2GradedModel("mr_half_graded", doublets, s, t2)


# ---------------------------------------------------------------------------
# bundled model library
# ---------------------------------------------------------------------------

_BUNDLED = {
    "ising": "ising.anyon",
    "ising_nu3": "ising_nu3.anyon",
    "ising_nu5": "ising_nu5.anyon",
    "ising_nu7": "ising_nu7.anyon",
    "ising_nu9": "ising_nu9.anyon",
    "ising_nu11": "ising_nu11.anyon",
    "ising_nu13": "ising_nu13.anyon",
    "ising_nu15": "ising_nu15.anyon",
    "su2_2": "ising_nu3.anyon",  # SU(2)_2 is the nu=3 Ising-type theory
    "fibonacci": "fibonacci.anyon",
    "z2": "z2.anyon",
    "z3": "z3.anyon",
    "z4": "z4.anyon",
}

_model_cache: dict[str, AnyonModel] = {}


def bundled_models() -> list[str]:
    return sorted(_BUNDLED)


def load_model(source: str | Path) -> AnyonModel:
    """Load a model by bundled name or from a definition file path."""
    key = str(source)
    if key in _BUNDLED:
        if key not in _model_cache:
            text = (
                resources.files("anyonmz").joinpath("data", _BUNDLED[key]).read_text()
            )
            _model_cache[key] = load_model_text(text, name=key)
        return _model_cache[key]
    path = Path(source)
    if not path.exists():
        raise ParseError(f"no bundled model or file named {source!r}")
    return load_model_text(path.read_text(), name=path.stem)
