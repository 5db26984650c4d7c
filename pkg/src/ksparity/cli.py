"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

from . import ledger as ledger_mod
from .incidence import RaySystem, full_system, table_text
from .parity import (
    DEFAULT_CAP,
    CapExceeded,
    ProofProfile,
    basis_ray_array,
    census,
    critical_flags,
    ids_of,
    is_parity_proof,
    kernel_basis,
    make_proof,
    mask_of,
    multiplicities,
    profile_of_counts,
)
from .pauli import enumerate_triads, mub_partitions, triad_eigenbasis
from .subsystems import SubsystemError, find_coverings, find_dodecagons, resolve

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _system(name: str) -> RaySystem:
    try:
        return resolve(name)
    except SubsystemError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        sys.stdout.write(text)
    if args.json_out:
        Path(args.json_out).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")


# generate ---------------------------------------------------------------------


def _rays_payload(system: RaySystem):
    if system.label == "60-105":
        lines, rows = [], []
        for k, t in enumerate(enumerate_triads()):
            eig = triad_eigenbasis(t)
            ids = range(4 * k + 1, 4 * k + 5)
            cells = "  ".join(f"{i}={r.compact()}" for i, (r, _) in zip(ids, eig))
            lines.append(f"{t.name:<16} {cells}")
            rows.append(
                {
                    "triad": t.name,
                    "rays": [
                        {"id": i, "components": r.text(), "signature": str(sig)}
                        for i, (r, sig) in zip(ids, eig)
                    ],
                }
            )
        return "\n".join(lines) + "\n", rows
    text = "".join(f"{i:2d}={r.compact()}  (parent {p})\n" for i, (r, p) in enumerate(zip(system.rays, system.parent_ray_ids), 1))
    rows = [{"id": i, "components": r.text(), "parent": p} for i, (r, p) in enumerate(zip(system.rays, system.parent_ray_ids), 1)]
    return text, rows


def cmd_generate(args) -> int:
    target = args.target
    if target == "rays":
        text, payload = _rays_payload(_system(args.system))
    elif target == "bases":
        s = _system(args.system)
        text = table_text(s)
        payload = s.to_json()
    elif target == "mubs":
        rows = [[t + 1 for t in row] for row in mub_partitions()]
        text = "".join(" ".join(f"{t:2d}" for t in row) + "\n" for row in rows)
        payload = rows
    elif target == "dodecagons":
        dods = find_dodecagons()
        text = "".join(
            f"{d.index:2d} {d.observable:<5} " + " ".join(f"{r:2d}" for r in d.ray_ids) + "\n" for d in dods
        )
        payload = [{"index": d.index, "observable": d.observable, "triads": list(d.triads), "rays": list(d.ray_ids)} for d in dods]
    elif target == "coverings":
        covs = find_coverings()
        text = "".join(" ".join(f"{d:2d}" for d in c) + "\n" for c in covs)
        payload = [list(c) for c in covs]
    else:  # argparse restricts choices
        raise UsageError(f"unknown target {target}")
    _emit(args, text, payload)
    return EXIT_OK


# enumerate --------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    s = _system(args.system)
    k = kernel_basis(s)
    c = census(s, cap=args.cap)
    rows = [(tuple(sorted(ids_of(int(w[0]) | int(w[1]) << 64))), bool(f)) for w, f in zip(c.words, c.critical)]
    rows.sort(key=lambda r: (len(r[0]), r[0]))
    if args.critical_only:
        rows = [r for r in rows if r[1]]
    if args.ledger:
        recs = (ledger_mod.LedgerRecord.of(make_proof(s, ids), crit) for ids, crit in rows)
        ledger_mod.write(args.ledger, recs)
    print(f"system {s.label}: kernel dimension {k.dimension}, {c.total} parity proofs, {int(c.critical.sum())} critical")
    if args.census or not args.ledger:
        src = c.critical_by_symbol if args.critical_only else c.by_symbol
        by_brief = sorted(src.items(), key=lambda kv: _symbol_key(kv[0]))
        for sym, n in by_brief:
            crit = c.critical_by_symbol.get(sym, 0)
            print(f"{ProofProfile.parse(sym).brief:>7}  {sym:<24} {n:7d}  critical {crit}")
    return EXIT_OK


def _symbol_key(sym: str):
    p = ProofProfile.parse(sym)
    return p.n_bases, p.n_rays, p.expanded


# verify -----------------------------------------------------------------------


def _load_proofs(path: str) -> list[dict]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    text = text.strip()
    if not text:
        return []
    try:
        obj = json.loads(text)
        items = obj if isinstance(obj, list) else [obj]
    except json.JSONDecodeError:
        try:
            items = [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed proof file: {exc}") from None
    for it in items:
        if not isinstance(it, dict) or "system" not in it or not ("basisIds" in it or "bases" in it):
            raise UsageError("each proof needs 'system' and 'basisIds' or 'bases'")
    return items


def _basis_ids(s: RaySystem, item: dict) -> tuple[int, ...]:
    if "basisIds" in item:
        ids = [int(x) for x in item["basisIds"]]
        if any(not 1 <= j <= s.n_bases for j in ids):
            raise UsageError(f"basis id out of range 1..{s.n_bases}")
        return tuple(sorted(ids))
    out = []
    for rays in item["bases"]:
        key = tuple(sorted(int(r) for r in rays))
        j = s.basis_index.get(key)
        if j is None:
            raise UsageError(f"{list(rays)} is not a basis of {s.label}")
        out.append(j)
    return tuple(sorted(out))


def verify_item(item: dict) -> dict:
    s = _system(str(item["system"]))
    ids = _basis_ids(s, item)
    parity = is_parity_proof(s, ids)
    counts = multiplicities(s, ids)
    prof = profile_of_counts(counts.values(), len(ids))
    crit = bool(critical_flags(s, [mask_of(ids)])[0]) if parity else False
    verdict = {"system": s.label, "bases": len(ids), "parity": parity, "critical": crit, "profile": prof.symbol}
    ok = parity
    if "expanded" in item:
        verdict["profile_matches"] = item["expanded"] == prof.symbol
        ok = ok and verdict["profile_matches"]
    if "critical" in item:
        ok = ok and bool(item["critical"]) == crit
    else:
        ok = ok and crit
    verdict["ok"] = ok
    return verdict


def cmd_verify(args) -> int:
    items = _load_proofs(args.proof_file)
    verdicts = [verify_item(it) for it in items]
    for v in verdicts:
        if args.json:
            continue
        mark = "ok" if v["ok"] else "FAIL"
        print(f"{mark:4} {v['system']:<12} B={v['bases']:3d} parity={v['parity']} critical={v['critical']} {v['profile']}")
    if args.json:
        print(json.dumps(verdicts, indent=1))
    return EXIT_OK if all(v["ok"] for v in verdicts) else EXIT_FAIL


# orbits -----------------------------------------------------------------------


def orbit_report(records, antiunitary: bool = False):
    """Orbit id per record and one summary row per orbit (first-seen order)."""
    from .symmetry import build_group

    records = list(records)
    if not records:
        return [], []
    full = full_system()
    group = build_group(full, antiunitary=antiunitary)
    systems: dict[str, RaySystem] = {}
    canon: dict[tuple, int] = {}
    summary: list[dict] = []
    ids = []
    for r in records:
        if r.system not in systems:
            systems[r.system] = _system(r.system)
        s = systems[r.system]
        parent = sorted(s.parent_basis_ids[j - 1] for j in r.basis_ids)
        orb = group.orbit_of_bases(parent)
        key = orb.members[0]
        if key not in canon:
            canon[key] = len(summary) + 1
            summary.append(
                {"orbit": canon[key], "size": orb.size, "stabilizer": orb.stabilizer_order, "expanded": r.expanded, "count": 0}
            )
        summary[canon[key] - 1]["count"] += 1
        ids.append(canon[key])
    return ids, summary


def cmd_orbits(args) -> int:
    try:
        records = list(ledger_mod.read(args.ledger))
    except (OSError, ledger_mod.LedgerError) as exc:
        raise UsageError(str(exc)) from None
    if args.system:
        bad = {r.system for r in records} - {args.system}
        if bad:
            raise UsageError(f"ledger holds records for {sorted(bad)}, expected {args.system}")
    ids, summary = orbit_report(records, antiunitary=args.antiunitary)
    if args.write:
        ledger_mod.write(
            args.ledger,
            (ledger_mod.LedgerRecord(r.system, r.basis_ids, r.brief, r.expanded, r.critical, o) for r, o in zip(records, ids)),
        )
    if args.json:
        print(json.dumps(summary, indent=1))
    else:
        for row in summary:
            print(f"orbit {row['orbit']:4d}  size {row['size']:5d}  stabilizer {row['stabilizer']:5d}  {row['expanded']}  in ledger {row['count']}")
        print(f"{len(records)} records, {len(summary)} orbits")
    return EXIT_OK


# desargues --------------------------------------------------------------------


def cmd_desargues(args) -> int:
    from .desargues import construct_30_15, find_configs

    s = _system(args.system)
    if s.n_rays != 40 or s.n_bases != 40:
        raise UsageError("desargues needs a 40-40 system")
    out = {"system": s.label, "configs": [], "proofs": {}}
    constructed = set()
    for kind in ("line", "triangle"):
        cfgs = find_configs(s, kind)
        proofs = [construct_30_15(s, c) for c in cfgs]
        constructed |= {p.basis_ids for p in proofs}
        out["configs"] += [c.to_json() for c in cfgs]
        out["proofs"][kind] = [list(p.basis_ids) for p in proofs]
        if not args.json:
            print(f"{kind}-type configurations: {len(cfgs)}")
            for c, p in zip(cfgs, proofs):
                print("  points " + " ".join(f"{x:2d}" for x in c.points) + "  ->  bases " + " ".join(str(j) for j in p.basis_ids))
    enumerated = {p.basis_ids for p in _proofs_with_symbol(s, "30_2-15_4")}
    match = constructed == enumerated
    out["constructed"] = len(constructed)
    out["enumerated"] = len(enumerated)
    out["match"] = match
    if args.json:
        print(json.dumps(out, indent=1))
    else:
        print(f"constructed {len(constructed)} distinct 30-15 proofs; enumeration has {len(enumerated)}; equal: {match}")
    return EXIT_OK if match else EXIT_FAIL


def _proofs_with_symbol(s: RaySystem, symbol: str):
    from .parity import symbols_for_words

    c = census(s)
    syms = symbols_for_words(c.words, basis_ray_array(s), s.n_rays)
    for w, sym in zip(c.words, syms):
        if sym == symbol:
            yield make_proof(s, ids_of(int(w[0]) | int(w[1]) << 64))


# search -----------------------------------------------------------------------


def cmd_search(args) -> int:
    from .profiles import search_profiles, target_symbols

    symbols = args.symbols or target_symbols()
    for sym in symbols:
        try:
            ProofProfile.parse(sym)
        except ValueError:
            raise UsageError(f"bad expanded symbol {sym!r}") from None
    systems = [_system(n) for n in args.systems] if args.systems else None
    rep = search_profiles(symbols, systems, seed=args.seed, budget=args.budget)
    for sym in symbols:
        h = rep.found.get(sym)
        if h:
            print(f"found    {sym:<24} in {h.system_label:<10} 60-105 bases {' '.join(map(str, h.proof.basis_ids))}")
        else:
            print(f"MISSING  {sym}")
    print(f"seed {rep.seed}: {len(rep.found)}/{len(symbols)} symbols, {rep.samples} samples, {rep.seconds:.1f} s")
    if args.ledger:
        ledger_mod.append(args.ledger, (ledger_mod.LedgerRecord.of(h.proof, True) for h in rep.found.values()))
    return EXIT_OK if not rep.missing(symbols) else EXIT_FAIL


# group ------------------------------------------------------------------------


def cmd_group(args) -> int:
    from .symmetry import build_group, hypergraph_automorphism_count, verify_group_axioms

    full = full_system()
    g = build_group(full, antiunitary=args.antiunitary)
    rep = verify_group_axioms(g)
    print(f"order {rep.order}; identity {rep.has_identity}; inverses {rep.inverses}; closed {rep.closed}; kinds preserved {rep.preserves_kinds}")
    if args.automorphisms:
        print(f"basis-hypergraph automorphisms: {hypergraph_automorphism_count(full)}")
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            for i in range(len(g)):
                el = g[i]
                meta = dict(el.spec.to_json(), conjugate=el.conjugate) if el.spec else {}
                fh.write(" ".join(map(str, el.ray_permutation)) + "  # " + json.dumps(meta, separators=(",", ":")) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


# entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ksparity", description="Parity proofs in the two-qubit 60-ray system.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="print a table (rays, bases, mubs, dodecagons, coverings)")
    g.add_argument("target", choices=["rays", "bases", "mubs", "dodecagons", "coverings"])
    g.add_argument("--system", default="60-105", help="subsystem address for rays/bases")
    g.add_argument("--json", action="store_true", help="print JSON instead of text")
    g.add_argument("--json-out", metavar="PATH", help="also write JSON here")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("enumerate", help="all parity proofs of a subsystem")
    e.add_argument("--system", required=True)
    e.add_argument("--critical-only", action="store_true")
    e.add_argument("--census", action="store_true", help="print counts per expanded symbol")
    e.add_argument("--ledger", metavar="PATH", help="write one JSON record per proof")
    e.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest kernel dimension to enumerate")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="re-check proofs from a JSON or ledger file")
    v.add_argument("proof_file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("orbits", help="symmetry orbits of ledger records")
    o.add_argument("ledger")
    o.add_argument("--system", help="require every record to be from this system")
    o.add_argument("--write", action="store_true", help="store orbit ids back into the ledger")
    o.add_argument("--antiunitary", action="store_true", help="include complex conjugation")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_orbits)

    d = sub.add_parser("desargues", help="10_3 configurations and their 30-15 proofs")
    d.add_argument("--system", default="40-40:6")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_desargues)

    s = sub.add_parser("search", help="sample kernels for proofs with given expanded symbols")
    s.add_argument("--symbols", nargs="*", help="expanded symbols, e.g. '40_2 3_4 4_6-29_4'")
    s.add_argument("--systems", nargs="*", help="subsystems to sample (default 48-72:1,1 and 60-105)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=float, default=1800.0, help="seconds")
    s.add_argument("--ledger", metavar="PATH", help="append hits here")
    s.set_defaults(func=cmd_search)

    gr = sub.add_parser("group", help="build and check the symmetry group")
    gr.add_argument("--antiunitary", action="store_true")
    gr.add_argument("--automorphisms", action="store_true", help="also count basis-hypergraph automorphisms")
    gr.add_argument("--export", metavar="PATH", help="write one permutation per line")
    gr.set_defaults(func=cmd_group)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
