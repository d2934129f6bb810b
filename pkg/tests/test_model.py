from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normcheck.annotate.model import EXTRACTOR, Annotation, AnnotationSet, rule_source


def test_annotation_rejects_empty_span():
    with pytest.raises(ValueError):
        Annotation(0, (3, 3), "X")
    with pytest.raises(ValueError):
        Annotation(0, (-1, 2), "X")


def test_features_are_read_only():
    ann = Annotation(0, (0, 1), "X", {"a": "b"})
    with pytest.raises(TypeError):
        ann.features["a"] = "c"


def test_rule_name():
    assert Annotation(0, (0, 1), "X", source=rule_source("R1")).rule_name == "R1"
    assert Annotation(0, (0, 1), "X", source=EXTRACTOR).rule_name is None


def test_set_orders_and_rejects_duplicate_ids():
    a = Annotation(0, (5, 6), "B")
    b = Annotation(1, (0, 9), "A")
    c = Annotation(2, (0, 3), "A")
    s = AnnotationSet("s", (a, b, c))
    assert [x.ann_id for x in s] == [2, 1, 0]
    assert s.next_id == 3
    assert s.of_type("A") == [c, b]
    with pytest.raises(ValueError):
        AnnotationSet("s", (a, Annotation(0, (1, 2), "C")))


spans = st.tuples(st.integers(0, 50), st.integers(1, 20)).map(lambda p: (p[0], p[0] + p[1]))
anns = st.lists(
    st.tuples(spans, st.sampled_from(["Mention", "Reference"]), st.dictionaries(st.text(max_size=3), st.text(max_size=5), max_size=2)),
    max_size=10,
)


@settings(max_examples=200, deadline=None)
@given(anns)
def test_json_round_trip(items):
    s = AnnotationSet("x", tuple(Annotation(i, span, t, f) for i, (span, t, f) in enumerate(items)))
    back = AnnotationSet.from_json(s.to_json("d"), "x")
    assert back == s
