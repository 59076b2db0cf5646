"""Walk the ordinal layer: normal forms, classification, descent.

Run me directly; every step prints what it is doing.
"""

from schreier import (
    OMEGA,
    classify,
    descend,
    format_ordinal,
    fundamental,
    omega_power,
    parse_ordinal,
    wainer_fundamental,
)

print("== parsing and normal forms ==")
for text in ("w*2 + 3", "1 + w", "w^(w+1) + w^2*4", "w^w^2"):
    x = parse_ordinal(text)
    print(f"  {text:>18}  ->  {format_ordinal(x)}")

print()
print("== zero / successor / limit ==")
for text in ("0", "7", "w", "w^2 + 1", "w^w"):
    x = parse_ordinal(text)
    kind, pred = classify(x)
    extra = f", predecessor {format_ordinal(pred)}" if pred is not None else ""
    print(f"  {text:>8}: {kind}{extra}")

print()
print("== the descent sequence under w^2 ==")
# each value approximates w^2 from below; larger entries climb faster
for n in (1, 2, 3, 5):
    v = fundamental(omega_power(2), n)
    print(f"  at {n}: {format_ordinal(v)}")

print()
print("== the two sequence schemes differ at w ==")
for n in (1, 2, 3, 10):
    print(f"  at {n:>2}: family scheme {fundamental(OMEGA, n)},"
          f" wainer {wainer_fundamental(OMEGA, n)}")

print()
print("== a full walk from w*2 down to zero along entries 3,4,5,... ==")
x = parse_ordinal("w*2")
n = 3
path = [format_ordinal(x)]
while not x.is_zero:
    x = descend(x, n)
    path.append(format_ordinal(x))
    n += 1
print("  " + "  >  ".join(path))
