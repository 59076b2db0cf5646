"""Ramsey-style searches whose answers carry their own receipts.

Every search returns a certificate: a small JSON-serialisable record
with a transcript hash.  verify_certificate re-derives the hash and
replays the combinatorial content, so a tampered certificate is caught
twice over.  The last section demonstrates that on purpose.
"""

import json

from schreier import (
    Window,
    detect_chain,
    from_json,
    hash_coloring,
    hereditary_dichotomy,
    homogenize,
    parse_family,
    verify_certificate,
)

win = Window(1, 18)

print("== homogenize: one color class holds a whole member ==")
coloring = hash_coloring(seed=7)
cert = homogenize(parse_family("A:2"), coloring, win, target=4)
print(f"  witness {cert.witness}, color {cert.payload_dict()['color']}")
ok, _ = verify_certificate(cert, coloring=coloring)
print(f"  verified: {ok}")

print()
print("== dichotomy: a hereditary predicate against a family ==")
certs = hereditary_dichotomy("down:F:1", parse_family("exL"), Window(1, 30))
for c in certs:
    print(f"  branch {c.payload_dict()['branch']}, witness {c.witness}")

print()
print("== chains witness how deep a predicate nests ==")
cert = detect_chain("member:F:1", Window(1, 12), depth=4)
links = [tuple(l) for l in cert.payload_dict()["chain"]]
print("  " + "  <  ".join(str(l) for l in links))

print()
print("== a forged certificate is rejected ==")
doc = cert.to_json_dict()
doc["witness"] = doc["witness"][:-1]  # drop one element, keep the hash
try:
    forged = from_json(doc)
    ok, reason = verify_certificate(forged)
except ValueError as e:
    ok, reason = False, str(e)
print(f"  accepted: {ok}")
print(f"  reason: {reason}")

print()
print("== certificates survive a JSON round trip ==")
wire = json.dumps(cert.to_json_dict())
back = from_json(json.loads(wire))
ok, _ = verify_certificate(back)
print(f"  round-tripped and verified: {ok}")
