"""
Counting with numerals
======================

Cardinality as a property: each finite set is named by the numeral of its
size in a chosen base. Successor works directly on the digit string.
"""

from namedsets import (
    BINARY,
    DECIMAL,
    UNDEFINED,
    Multiset,
    PlainSet,
    Property,
    count_multiset,
    count_set,
    natural_number_property,
    successor_numeral,
)
from namedsets.properties import property_as_named_set

print(count_set(PlainSet("S", {"a", "b", "c"}), DECIMAL))
ten = PlainSet("Ten", {f"e{i}" for i in range(10)})
print(count_set(ten, DECIMAL), count_set(ten, BINARY))

# a multiset counts its copies
print(count_multiset(Multiset("M", {"a": 2, "b": 3}), DECIMAL))

# successor carries through the digits
for n, scale in [("9", DECIMAL), ("999", DECIMAL), ("1011", BINARY), ("111", BINARY)]:
    print(n, "->", successor_numeral(n, scale))

# adding one element agrees with taking the successor
S = PlainSet("S", {f"x{i}" for i in range(7)})
print(count_set(PlainSet("S", S.elements | {"z"}), BINARY), successor_numeral(count_set(S, BINARY), BINARY))

# a property is a partial valuation; outside its domain it is undefined
truth = Property("truth", "statements", {"2+2=4": "T", "snow is black": "F"}, "TF")
print(truth("2+2=4"), truth("the moon is cheese") is UNDEFINED)

eta = natural_number_property([PlainSet("s1", {"a", "b", "c"}), PlainSet("s2", {"b"})], DECIMAL)
print(eta.scale_label, dict(eta.valuation))
print(sorted(property_as_named_set(eta).relation))
