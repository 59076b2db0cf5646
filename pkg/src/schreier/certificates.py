"""Verifiable search artifacts.

Every search emits a certificate binding its witness, family, window and
outcome under a transcript hash.  Verification recomputes the hash first
(any mutation is rejected before semantics are consulted), then re-checks
the claim by direct enumeration over subsets of the witness, independent
of the search that produced it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Callable, Dict, Optional, Tuple

from .colorings import Coloring, get_coloring
from .families import parse_family
from .finsets import FinSet, Window, as_finset

CERT_KINDS = (
    "Homogeneous",
    "DichotomyBranchA",
    "DichotomyBranchB",
    "SpernerRefined",
    "Chain",
    "Transfer",
)


class CertificateError(ValueError):
    """Certificate is structurally malformed."""


@dataclass(frozen=True, eq=True)
class Certificate:
    kind: str
    family: str
    window: Window
    witness: FinSet
    payload: Tuple[Tuple[str, object], ...]
    transcript_hash: str

    def payload_dict(self) -> Dict[str, object]:
        return dict(self.payload)

    def to_json_dict(self) -> Dict[str, object]:
        d = _transcript_body(self.kind, self.family, self.window, self.witness,
                             self.payload)
        d["transcript_hash"] = self.transcript_hash
        return d


def _jsonify(value):
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (str, bool, int, float)) or value is None:
        return value
    return str(value)


def _transcript_body(kind, family, window, witness, payload) -> Dict[str, object]:
    w = {"lo": window.lo, "hi": window.hi}
    if window.ground != tuple(range(window.lo, window.hi + 1)):
        w["ground"] = list(window.ground)
    return {
        "kind": kind,
        "family": family,
        "window": w,
        "witness": list(witness),
        "payload": _jsonify(dict(payload)),
    }


def transcript_digest(kind, family, window, witness, payload) -> str:
    body = _transcript_body(kind, family, window, witness, payload)
    blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def make_certificate(kind: str, family: str, window: Window, witness,
                     payload: Dict[str, object]) -> Certificate:
    if kind not in CERT_KINDS:
        raise CertificateError(f"unknown certificate kind {kind!r}")
    witness = as_finset(witness)
    items = tuple(sorted(payload.items()))
    digest = transcript_digest(kind, family, window, witness, items)
    return Certificate(kind, family, window, witness, items, digest)


def to_json(cert: Certificate) -> str:
    return json.dumps(cert.to_json_dict(), sort_keys=True, indent=2)


def from_json(data) -> Certificate:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        kind = data["kind"]
        family = data["family"]
        w = data["window"]
        window = Window(w["lo"], w["hi"],
                        tuple(w["ground"]) if "ground" in w else None)
        witness = as_finset(data["witness"])
        payload = tuple(sorted(data["payload"].items()))
        digest = data["transcript_hash"]
    except (KeyError, TypeError) as e:
        raise CertificateError(f"missing certificate field: {e}") from e
    if kind not in CERT_KINDS:
        raise CertificateError(f"unknown certificate kind {kind!r}")
    return Certificate(kind, family, window, witness, payload, digest)


def hereditary_predicate(desc: str) -> Callable[[FinSet], bool]:
    """Resolve a recorded set-family predicate description.

    Forms: ``all`` (every finite set), ``down:<family>`` (subset closure),
    ``member:<family>`` (plain membership; used when the left side of a
    containment is itself a family rather than a closure).
    """
    if desc == "all":
        return lambda s: True
    if desc.startswith("down:"):
        spec = parse_family(desc[len("down:"):])
        return spec.down
    if desc.startswith("member:"):
        spec = parse_family(desc[len("member:"):])
        return spec.member
    raise CertificateError(f"unknown predicate description {desc!r}")


def _subsets(base: FinSet, include_empty: bool = True):
    start = 0 if include_empty else 1
    return chain.from_iterable(
        combinations(base, k) for k in range(start, len(base) + 1)
    )


def _verify_homogeneous(cert: Certificate, coloring: Optional[Coloring]):
    p = cert.payload_dict()
    spec = parse_family(cert.family)
    target = p.get("target")
    color = p.get("color")
    name = p.get("coloring", "")
    if len(cert.witness) != target:
        return False, f"witness size {len(cert.witness)} != target {target}"
    if coloring is None:
        if name.startswith("external:"):
            return False, "external coloring requires a caller-supplied oracle"
        seed = int(p.get("seed", 0))
        if name.startswith("hash[") and name.endswith("]"):
            name, seed = "hash", int(name[5:-1])
        try:
            coloring = get_coloring(name, seed)
        except ValueError as e:
            return False, str(e)
    for s in _subsets(cert.witness, include_empty=False):
        if spec.member(s) and coloring(s) != color:
            return False, f"member {s} has color {coloring(s)}, expected {color}"
    return True, "ok"


def _verify_dichotomy(cert: Certificate, branch: str):
    p = cert.payload_dict()
    spec = parse_family(cert.family)
    try:
        hered = hereditary_predicate(p.get("hereditary", ""))
    except CertificateError as e:
        return False, str(e)
    for t in _subsets(cert.witness):
        if branch == "A":
            try:
                in_down = spec.down(t)
            except ValueError as e:
                return False, str(e)
            if in_down and not hered(t):
                return False, f"{t} is in the subset closure but outside the target"
        else:
            if hered(t) and not (spec.star(t) and not spec.member(t)):
                return False, f"{t} is not a proper initial segment of a member"
    return True, "ok"


def _verify_sperner(cert: Certificate):
    spec = parse_family(cert.family)
    members = [s for s in _subsets(cert.witness, include_empty=False)
               if spec.member(s)]
    for i, s in enumerate(members):
        ss = set(s)
        for t in members[i + 1:]:
            st = set(t)
            if ss < st or st < ss:
                return False, f"members {s} and {t} are nested"
    return True, "ok"


def _verify_chain(cert: Certificate):
    p = cert.payload_dict()
    try:
        hered = hereditary_predicate(p.get("hereditary", ""))
    except CertificateError as e:
        return False, str(e)
    links = [as_finset(s) for s in p.get("chain", ())]
    if len(links) != p.get("depth"):
        return False, "chain length disagrees with recorded depth"
    if not links:
        return False, "empty chain"
    for s in links:
        if not hered(s):
            return False, f"{s} is outside the family"
    for a, b in zip(links, links[1:]):
        if not (len(a) < len(b) and b[:len(a)] == a):
            return False, f"{a} is not a proper initial segment of {b}"
    if links[-1] != cert.witness:
        return False, "witness disagrees with final chain link"
    return True, "ok"


def _verify_transfer(cert: Certificate):
    # local import: search builds certificates, so the module dependency
    # runs the other way at load time
    from .search import recheck_transfer

    return recheck_transfer(cert)


def verify_certificate(cert: Certificate,
                       coloring: Optional[Coloring] = None) -> Tuple[bool, str]:
    """Hash check first, then an exhaustive semantic re-check."""
    digest = transcript_digest(cert.kind, cert.family, cert.window,
                               cert.witness, cert.payload)
    if digest != cert.transcript_hash:
        return False, "transcript hash mismatch"
    if cert.kind == "Homogeneous":
        return _verify_homogeneous(cert, coloring)
    if cert.kind == "DichotomyBranchA":
        return _verify_dichotomy(cert, "A")
    if cert.kind == "DichotomyBranchB":
        return _verify_dichotomy(cert, "B")
    if cert.kind == "SpernerRefined":
        return _verify_sperner(cert)
    if cert.kind == "Chain":
        return _verify_chain(cert)
    if cert.kind == "Transfer":
        return _verify_transfer(cert)
    return False, f"unknown certificate kind {cert.kind!r}"
