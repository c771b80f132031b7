"""Model-based falsification of the axiom schemata.

Instances of every schema are sampled over random signatures and each one is
evaluated at every state of every random model over the same signature.  A
sound schema never produces a counterexample; the planted schema ``BAD``
(``[C]phi -> [C]~phi``) is there to show that the harness can fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .generators import GeneratorConfig, Rng, random_coalition, random_formula, random_model, random_signature
from .io import model_to_dict
from .models import extension
from .proofs import SCHEMATA, is_axiom_instance
from .syntax import (
    BOTTOM,
    TOP,
    And,
    Coal,
    Formula,
    Neg,
    TypedSignature,
    iff,
    implies,
    lor,
    region_formula,
    render_formula,
)

# classical tautologies over letters p, q, r
_TAUTOLOGIES: list[Callable[[Formula, Formula, Formula], Formula]] = [
    lambda p, q, r: implies(p, p),
    lambda p, q, r: lor(p, Neg(p)),
    lambda p, q, r: implies(And(p, q), p),
    lambda p, q, r: implies(p, implies(q, p)),
    lambda p, q, r: implies(implies(p, implies(q, r)), implies(implies(p, q), implies(p, r))),
    lambda p, q, r: implies(implies(Neg(p), Neg(q)), implies(q, p)),
    lambda p, q, r: iff(Neg(Neg(p)), p),
    lambda p, q, r: implies(implies(implies(p, q), p), p),
    lambda p, q, r: iff(Neg(And(p, q)), lor(Neg(p), Neg(q))),
    lambda p, q, r: implies(p, lor(p, q)),
]


def _phi(cfg, sig, rng):
    return random_formula(cfg, sig, "vcl", rng, depth=rng.between(0, 2))


def _p1(sig, rng, cfg):
    return rng.choice(_TAUTOLOGIES)(_phi(cfg, sig, rng), _phi(cfg, sig, rng), _phi(cfg, sig, rng))


def _c1(sig, rng, cfg):
    c = random_coalition(sig, rng)
    phi, psi = _phi(cfg, sig, rng), _phi(cfg, sig, rng)
    return implies(Coal(c, And(phi, psi)), Coal(c, phi))


def _c2(sig, rng, cfg):
    return Neg(Coal(random_coalition(sig, rng), BOTTOM))


def _c3(sig, rng, cfg):
    return Coal(random_coalition(sig, rng), TOP)


def _c4(sig, rng, cfg):
    c, d = [], []
    for a in sig.agents:
        k = rng.below(3)
        (c if k == 0 else d if k == 1 else []).append(a)
    phi, psi = _phi(cfg, sig, rng), _phi(cfg, sig, rng)
    return implies(And(Coal(tuple(c), phi), Coal(tuple(d), psi)), Coal(sig.coalition(c + d), And(phi, psi)))


def _c5(sig, rng, cfg):
    phi = _phi(cfg, sig, rng)
    return implies(Neg(Coal((), Neg(phi))), Coal(sig.agents, phi))


def _v1(sig, rng, cfg):
    x = rng.choice(sig.variables)
    return region_formula(x, sig.domain(x), sig)


def _v2(sig, rng, cfg):
    x = rng.choice([v for v in sig.variables if len(sig.domain(v)) > 1])
    dom = sig.domain(x)
    i = rng.below(len(dom))
    j = (i + 1 + rng.below(len(dom) - 1)) % len(dom)
    return implies(sig.atom(x, dom[i]), Neg(sig.atom(x, dom[j])))


def _bad(sig, rng, cfg):
    c = random_coalition(sig, rng)
    phi = _phi(cfg, sig, rng)
    return implies(Coal(c, phi), Coal(c, Neg(phi)))


INSTANCE_SAMPLERS = {
    "P1": _p1, "C1": _c1, "C2": _c2, "C3": _c3, "C4": _c4, "C5": _c5, "V1": _v1, "V2": _v2,
}
PLANTED_BAD = {"BAD": _bad}


@dataclass
class SoundnessReport:
    seed: int
    n_models: int
    n_instances: int
    evaluations: int = 0
    failures: int = 0
    per_schema: dict[str, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    misclassified: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.misclassified

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n_models": self.n_models,
            "n_instances": self.n_instances,
            "evaluations": self.evaluations,
            "failures": self.failures,
            "per_schema": dict(self.per_schema),
            "counterexamples": self.counterexamples,
            "misclassified": self.misclassified,
        }


def _signature(cfg: GeneratorConfig, rng: Rng) -> TypedSignature:
    # V2 needs a variable with at least two values
    while True:
        sig = random_signature(cfg, rng, min_variables=1)
        if any(len(d) > 1 for d in sig.domains):
            return sig


def soundness_harness(
    seed: int,
    n_models: int,
    n_instances: int,
    schemata: dict[str, Callable] | None = None,
    n_signatures: int = 1,
    cfg: GeneratorConfig | None = None,
    max_counterexamples: int = 20,
) -> SoundnessReport:
    """Evaluate sampled schema instances at every state of random models.

    Models and instances are split evenly over ``n_signatures`` random
    signatures; within a group every instance meets every model.  Sampled
    instances of real schemata are also fed back to the schema recogniser,
    and any it rejects are listed as ``misclassified``.
    """
    cfg = cfg or GeneratorConfig(seed=seed, n_variables=2, domain_size=3)
    if cfg.n_variables == 0 or cfg.domain_size < 2:
        raise ValueError("the harness needs variables with at least two values")
    samplers = dict(INSTANCE_SAMPLERS if schemata is None else schemata)
    names = list(samplers)
    report = SoundnessReport(seed, n_models, n_instances, per_schema={n: 0 for n in names})
    for group in range(n_signatures):
        rng = Rng(seed, "soundness", group)
        sig = _signature(cfg, rng)
        k_models = n_models // n_signatures + (group < n_models % n_signatures)
        k_inst = n_instances // n_signatures + (group < n_instances % n_signatures)
        models = [random_model(cfg, Rng(seed, "soundness-model", group, i), sig) for i in range(k_models)]
        instances = []
        for i in range(k_inst):
            name = names[i % len(names)]
            f = samplers[name](sig, Rng(seed, "soundness-instance", group, i), cfg)
            instances.append((name, f))
            report.per_schema[name] += 1
            if name in SCHEMATA and not is_axiom_instance(f, name, sig):
                report.misclassified.append({"schema": name, "formula": render_formula(f)})
        for name, f in instances:
            for m in models:
                report.evaluations += 1
                bad = m.tables.all_states & ~extension(m, f)
                if bad:
                    report.failures += 1
                if bad and len(report.counterexamples) < max_counterexamples:
                    report.counterexamples.append(
                        {
                            "schema": name,
                            "formula": render_formula(f),
                            "state": m.states_of(bad)[0],
                            "model": model_to_dict(m),
                        }
                    )
    return report
