"""Command-line interface: ``cqbounds <subcommand> [options]``.

Exit codes: 0 success, 1 invalid input, 2 solver non-convergence (the result
is still written, with ``"converged": false``).

Curves are written as CSV with columns ``R_nats,E_nats,finite`` (``R_bits,
E_bits,finite`` with ``--unit bits``); every other result is JSON.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .channel import PureStateChannel
from .elias import (
    SpuSearchSpace,
    code_overlap_exponent,
    espu_cc,
    extract_subcode,
    overlap_rate_bound,
)
from .io import (
    channel_from_dict,
    code_from_dict,
    composition_from_dict,
    conditional_from_dict,
    dumps,
    encode_complex,
    file_digest,
    graph_from_dict,
    load_json,
)
from .linalg import InvalidInputError
from .renyi import SolverConfig
from .spherepacking import (
    BoundCurve,
    CondChannelFamily,
    CondE0Table,
    E0Table,
    e0_optimal_composition,
    e0cc,
    espcc,
    espcc_cond,
    r_infinity_global,
)
from .theta import (
    ThetaConfig,
    max_p_theta,
    theta_lovasz,
    theta_marton,
    theta_sp,
)

EXIT_OK, EXIT_INVALID, EXIT_NONCONVERGED = 0, 1, 2
SUBCOMMANDS = (
    "validate",
    "e0cc",
    "espcc",
    "rinf",
    "rinf-global",
    "e0-opt",
    "theta",
    "espcc-cond",
    "espu",
    "weakened",
    "overlap",
    "subcode",
)
INPUT_FLAGS = ("channel", "graph", "comp", "cond", "code")


def _grid_spec(text: str, what: str):
    try:
        a, b, n = text.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError as exc:
        raise InvalidInputError(f"{what} must read A:B:N, got {text!r}") from exc
    if n < 1 or not b >= a:
        raise InvalidInputError(f"{what} {text!r}: need N >= 1 and B >= A")
    return a, b, n


def rate_grid(text: str) -> np.ndarray:
    return np.linspace(*_grid_spec(text, "rate grid"))


def rho_grid(text: str) -> np.ndarray:
    a, b, n = _grid_spec(text, "rho grid")
    if not a > 0:
        raise InvalidInputError(f"rho grid {text!r}: A must be positive")
    return np.geomspace(a, b, n)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cqbounds", description="Reliability bounds for classical-quantum channels.")
    p.add_argument("subcommand", choices=SUBCOMMANDS)
    for name in INPUT_FLAGS:
        p.add_argument(f"--{name}", metavar="FILE")
    p.add_argument("--variant", choices=("marton", "sp", "lovasz", "maxp"), default="marton")
    p.add_argument("--rho", type=float)
    p.add_argument("--rate", type=float)
    p.add_argument("--rate-grid", dest="rate_grid")
    p.add_argument("--rho-grid", dest="rho_grid", help="A:B:N log-spaced grid for espu/weakened")
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--unit", choices=("nats", "bits"), default="nats")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--manifest", action="store_true")
    return p


class Run:
    """State shared by one CLI invocation."""

    def __init__(self, args):
        self.args = args
        self.scale = 1.0 / np.log(2.0) if args.unit == "bits" else 1.0
        cfg = SolverConfig(seed=args.seed)
        if args.tol is not None:
            cfg = cfg.with_(grad_tol=args.tol)
        self.cfg = cfg
        self.theta_cfg = ThetaConfig(seed=args.seed)
        self.converged = True

    def need(self, name: str) -> dict:
        path = getattr(self.args, name)
        if path is None:
            raise InvalidInputError(f"--{name} FILE is required for '{self.args.subcommand}'")
        return load_json(path)

    def channel(self):
        return channel_from_dict(self.need("channel"))

    def pure_channel(self) -> PureStateChannel:
        ch = self.channel()
        if not isinstance(ch, PureStateChannel):
            raise InvalidInputError("this subcommand needs a pure-state channel file ('vectors' field)")
        return ch

    def comp(self, size: int) -> np.ndarray:
        P = composition_from_dict(self.need("comp"))
        if P.size != size:
            raise InvalidInputError(f"composition length {P.size} differs from alphabet size {size}")
        return P

    def rho(self) -> float:
        if self.args.rho is None:
            raise InvalidInputError(f"--rho is required for '{self.args.subcommand}'")
        return self.args.rho

    def rates(self):
        """Returns ``(rates, is_grid)``."""
        if self.args.rate_grid is not None:
            return rate_grid(self.args.rate_grid), True
        if self.args.rate is None:
            raise InvalidInputError(f"--rate or --rate-grid is required for '{self.args.subcommand}'")
        return np.array([self.args.rate]), False

    def nats(self, x: float) -> float:
        return float(x) * self.scale

    def track(self, flag) -> bool:
        self.converged &= bool(flag)
        return bool(flag)

    def manifest(self) -> dict:
        digests = {}
        for name in INPUT_FLAGS:
            path = getattr(self.args, name)
            if path is not None:
                digests[name] = {"path": str(path), "sha256": file_digest(path)}
        return {
            "subcommand": self.args.subcommand,
            "inputs": digests,
            "solver": {
                "max_iters": self.cfg.max_iters,
                "grad_tol": self.cfg.grad_tol,
                "restarts": self.cfg.restarts,
                "rank_tol": self.cfg.rank_tol,
            },
            "seed": self.args.seed,
            "unit": self.args.unit,
            "version": __version__,
        }


def curve_csv(run: Run, curve: BoundCurve) -> str:
    header = ("R_bits", "E_bits", "finite") if run.args.unit == "bits" else ("R_nats", "E_nats", "finite")
    return curve.to_csv(scale=run.scale, header=header)


# ---------------------------------------------------------------------------
# subcommands; each returns a JSON-able dict or a BoundCurve


def cmd_validate(run: Run):
    checked = {}
    if run.args.channel:
        ch = run.channel()
        checked["channel"] = {
            "kind": "pure" if isinstance(ch, PureStateChannel) else "cq",
            "alphabet_size": ch.alphabet_size,
            "dim": ch.dim,
        }
    if run.args.graph:
        G = graph_from_dict(run.need("graph"))
        checked["graph"] = {"n": G.n, "edges": len(G.edges)}
    if run.args.comp:
        P = composition_from_dict(run.need("comp"))
        checked["comp"] = {"size": int(P.size)}
    if run.args.cond:
        V = conditional_from_dict(run.need("cond"))
        checked["cond"] = {"shape": list(V.matrix.shape)}
    if run.args.code:
        code = code_from_dict(run.need("code"))
        checked["code"] = {"M": code.size, "n": code.length, "alphabet_size": code.alphabet_size}
    if not checked:
        raise InvalidInputError("validate: no input files given")
    return {"valid": True, "checked": checked}


def cmd_e0cc(run: Run):
    ch = run.channel()
    P = run.comp(ch.alphabet_size)
    res = e0cc(ch, run.rho(), P, run.cfg)
    run.track(res.converged)
    return {"rho": run.rho(), "value": run.nats(res.value), "converged": res.converged}


def _curve_or_point(run: Run, evaluate):
    rates, grid = run.rates()
    if not grid:
        point = evaluate(rates[0])
        return {"rate": run.nats(rates[0]), **point}
    curve = BoundCurve(metadata={"subcommand": run.args.subcommand})
    for R in rates:
        curve.append(R, evaluate(R)["raw"])
    return curve


def cmd_espcc(run: Run):
    ch = run.channel()
    P = run.comp(ch.alphabet_size)
    table = E0Table(ch, P, run.cfg)

    def evaluate(R):
        res = espcc(ch, R, P, run.cfg, table=table)
        run.track(res.converged)
        return {
            "raw": res.value,
            "value": run.nats(res.value),
            "rho": res.rho,
            "finite": res.finite,
            "converged": res.converged,
        }

    return _strip_raw(_curve_or_point(run, evaluate))


def _strip_raw(out):
    if isinstance(out, dict):
        out.pop("raw", None)
    return out


def cmd_rinf(run: Run):
    ch = run.channel()
    P = run.comp(ch.alphabet_size)
    table = E0Table(ch, P, run.cfg)
    value = table.r_infinity()
    run.track(table.converged)
    return {"value": run.nats(value), "converged": table.converged}


def cmd_rinf_global(run: Run):
    res = r_infinity_global(run.channel(), run.cfg)
    return {
        "value": run.nats(res.value),
        "smoothed_value": run.nats(res.smoothed_value),
        "residual": res.residual,
        "argmin": encode_complex(res.argmin),
    }


def cmd_e0_opt(run: Run):
    res = e0_optimal_composition(run.channel(), run.rho(), run.cfg)
    return {
        "rho": run.rho(),
        "value": run.nats(res.value),
        "max_min_value": run.nats(res.max_min_value),
        "composition": res.composition,
        "gap": run.nats(res.gap),
        "warning": res.warning,
    }


def cmd_theta(run: Run):
    G = graph_from_dict(run.need("graph"))
    variant = run.args.variant
    if variant == "lovasz":
        res = theta_lovasz(G, run.theta_cfg)
        return {"variant": variant, "value": run.nats(res.value), "witness": res.witness.to_dict(res.value)}
    if variant == "maxp":
        res = max_p_theta(G, run.theta_cfg)
        return {
            "variant": variant,
            "value": run.nats(res.value),
            "composition": res.composition,
            "lovasz": run.nats(res.lovasz),
            "gap": run.nats(res.gap),
            "witness": res.witness.to_dict(res.value),
        }
    P = run.comp(G.n)
    if variant == "marton":
        res = theta_marton(G, P, run.theta_cfg)
        return {"variant": variant, "value": run.nats(res.value), "witness": res.witness.to_dict(res.value)}
    res = theta_sp(G, P, run.theta_cfg)
    wit = res.witness
    return {
        "variant": variant,
        "value": run.nats(res.value),
        "witness": {
            "projectors": [encode_complex(u) for u in wit.projectors],
            "state": encode_complex(wit.state),
            "value_nats": res.value,
        },
    }


def _family(run: Run) -> CondChannelFamily:
    data = run.need("cond")
    V = conditional_from_dict(data)
    if "channels" in data:
        chans = [channel_from_dict(c) for c in data["channels"]]
    else:
        chans = [run.channel()] * V.matrix.shape[0]
    if "P_A" in data:
        P_A = np.asarray(data["P_A"], dtype=float)
    else:
        P_A = run.comp(V.matrix.shape[0])
    return CondChannelFamily(tuple(chans), P_A, V)


def cmd_espcc_cond(run: Run):
    fam = _family(run)
    table = CondE0Table(fam, run.cfg)

    def evaluate(R):
        res = espcc_cond(fam, R, run.cfg, table=table)
        run.track(res.converged)
        return {
            "raw": res.value,
            "value": run.nats(res.value),
            "rho": res.rho,
            "finite": res.finite,
            "converged": res.converged,
        }

    return _strip_raw(_curve_or_point(run, evaluate))


def _rho_grid(run: Run):
    if run.args.rho_grid is None:
        return None
    return rho_grid(run.args.rho_grid)


def _spu(run: Run, space: SpuSearchSpace, ch, P):
    cache: dict = {}
    rates, _ = run.rates()
    points = []
    for R in rates:
        res = espu_cc(ch, R, P, space, run.cfg, cache=cache)
        run.track(res.converged)
        d = res.describe()
        d["value"] = run.nats(d.pop("value_nats"))
        d["rate"] = run.nats(R)
        points.append(d)
    return {"points": points, "space": {"size": space.size, **space.metadata}}


def cmd_espu(run: Run):
    ch = run.pure_channel()
    P = run.comp(ch.alphabet_size)
    space = SpuSearchSpace.build(ch, P, rhos=_rho_grid(run), eps=run.args.eps, seed=run.args.seed)
    return _spu(run, space, ch, P)


def cmd_weakened(run: Run):
    ch = run.pure_channel()
    P = run.comp(ch.alphabet_size)
    space = SpuSearchSpace.build(
        ch, P, rhos=_rho_grid(run), n_random_v=0, eps=run.args.eps, seed=run.args.seed, include_identity=False
    )
    return _spu(run, space, ch, P)


def cmd_overlap(run: Run):
    code = code_from_dict(run.need("code"))
    ch = run.pure_channel()
    if run.args.comp is None:
        value = code_overlap_exponent(code, ch)
        return {"value": run.nats(value), "M": code.size, "n": code.length}
    P = run.comp(ch.alphabet_size)
    space = SpuSearchSpace.build(ch, P, rhos=_rho_grid(run), eps=run.args.eps, seed=run.args.seed)
    return overlap_rate_bound(ch, P, space, run.cfg)


def cmd_subcode(run: Run):
    code = code_from_dict(run.need("code"))
    P = run.comp(code.alphabet_size)
    V = conditional_from_dict(run.need("cond"))
    wit = extract_subcode(code, P, V, seed=run.args.seed)
    if wit is None:
        return {"witness": None}
    return {
        "witness": wit.to_dict(),
        "size": wit.size,
        "size_bound": wit.size_bound,
        "exhaustive": wit.exhaustive,
    }


COMMANDS = {
    "validate": cmd_validate,
    "e0cc": cmd_e0cc,
    "espcc": cmd_espcc,
    "rinf": cmd_rinf,
    "rinf-global": cmd_rinf_global,
    "e0-opt": cmd_e0_opt,
    "theta": cmd_theta,
    "espcc-cond": cmd_espcc_cond,
    "espu": cmd_espu,
    "weakened": cmd_weakened,
    "overlap": cmd_overlap,
    "subcode": cmd_subcode,
}


def _emit(run: Run, result, stdout) -> None:
    out = run.args.out
    if isinstance(result, BoundCurve):
        text = curve_csv(run, result)
        if out and not out.endswith(".csv"):
            text = dumps({"curve": text.splitlines(), "unit": run.args.unit})
        manifest = dumps(run.manifest()) if run.args.manifest else None
        if out:
            Path(out).write_text(text, encoding="utf-8")
            if manifest:
                Path(out + ".manifest.json").write_text(manifest, encoding="utf-8")
        else:
            stdout.write(text)
            if manifest:
                sys.stderr.write(manifest)
        return
    payload = dict(result)
    payload["unit"] = run.args.unit
    payload.setdefault("converged", run.converged)
    if run.args.manifest:
        payload["manifest"] = run.manifest()
    text = dumps(payload)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    state = Run(args)
    try:
        result = COMMANDS[args.subcommand](state)
        _emit(state, result, stdout)
    except InvalidInputError as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    return EXIT_OK if state.converged else EXIT_NONCONVERGED


def main() -> None:
    sys.exit(run())
