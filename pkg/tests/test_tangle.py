import pytest

from superbraid.schema import SignSeq
from superbraid.tangle import (
    BraidWord, Compose, Gen, Id, TangleError, Tensor, classical_kink, closure,
    crossing, cup, cap, has_omega, iter_gens, layer, omega_op, parse_braid,
    parse_tangle, partial_closure, render_braid, render_tangle, serialize_ops,
    skein_triple, virtual_curl, writhe,
)

VIRTUAL_TREFOIL = "N=2 v1 S1 S1"
K4_105 = "N=3 v1 S1 v1 S2 v1 S1 v1 S2"


def test_parse_braid_and_render():
    b = parse_braid(VIRTUAL_TREFOIL)
    assert b.strands == 2
    assert b.letters == (("v", 1), ("S", 1), ("S", 1))
    assert render_braid(b) == VIRTUAL_TREFOIL
    assert parse_braid(render_braid(b)) == b
    assert len(parse_braid(K4_105)) == 8


def test_parse_braid_errors():
    with pytest.raises(TangleError):
        parse_braid("v1 S1")
    with pytest.raises(TangleError):
        parse_braid("N=2 x1")
    with pytest.raises(TangleError):
        parse_braid("N=2 s2")
    with pytest.raises(TangleError):
        parse_braid("N=0")


def test_writhe():
    assert writhe(parse_braid(VIRTUAL_TREFOIL)) == -2
    assert writhe(parse_braid("N=2")) == 0
    assert writhe(parse_braid("N=3 s1 s2 v1 S1")) == 1
    assert writhe(closure(parse_braid(VIRTUAL_TREFOIL))) == -2
    assert writhe(classical_kink("L", +1)) == 1


def test_braid_permutation_and_knot_check():
    assert parse_braid(VIRTUAL_TREFOIL).is_knot_closure()
    assert parse_braid(K4_105).is_knot_closure()
    assert not parse_braid("N=2").is_knot_closure()
    assert not parse_braid("N=3 v1").is_knot_closure()
    assert parse_braid("N=1").is_knot_closure()


def test_braid_inverse_and_product():
    b = parse_braid("N=3 s1 v2 S1")
    assert (b * b.inverse()).permutation() == (0, 1, 2)
    assert b.inverse().letters == (("s", 1), ("v", 2), ("S", 1))


def test_to_tangle_boundaries():
    b = parse_braid(VIRTUAL_TREFOIL)
    t = b.to_tangle()
    assert t.dom == SignSeq("uu")
    assert t.cod == SignSeq("uu")
    c = closure(b)
    assert c.dom == SignSeq("")
    assert c.cod == SignSeq("")
    p = partial_closure(parse_braid(K4_105))
    assert p.dom == SignSeq("u")
    assert p.cod == SignSeq("u")


def test_compose_mismatch():
    with pytest.raises(TangleError):
        Compose(Id(SignSeq("uu")), Id(SignSeq("ud")))
    with pytest.raises(TangleError):
        Id(SignSeq("u")).then(cup("R"))


def test_crossing_validation():
    with pytest.raises(TangleError):
        crossing("xp", "U", "u")
    with pytest.raises(TangleError):
        crossing("oxp", "u", "u")
    g = crossing("oxp", "U", "u")
    assert g.dom == SignSeq("Uu") and g.cod == SignSeq("uU")
    assert omega_op("oxm", "d").dom == SignSeq("d")


def test_skein_triple_writhe_relations():
    b = parse_braid(K4_105)
    plus, minus, smooth = skein_triple(b, 2)
    assert writhe(plus) - 2 == writhe(minus)
    assert writhe(minus) + 1 == writhe(smooth)
    assert len(smooth) == len(b) - 1
    assert plus.letters[1] == ("s", 1)
    with pytest.raises(TangleError):
        skein_triple(b, 1)  # virtual site
    with pytest.raises(TangleError):
        skein_triple(b, 9)


def test_parse_tangle_basic():
    doc = "signs: uu\nv 1\ncupR 2\ncapR 2\n"
    t = parse_tangle(doc)
    assert t.dom == SignSeq("uu")
    assert t.cod == SignSeq("uu")
    kinds = [g.kind for g in iter_gens(t)]
    assert kinds == ["v", "cupR", "capR"]


def test_parse_tangle_multi_item_slice():
    doc = "signs: uuuu\nxp 1, xm 3\n"
    t = parse_tangle(doc)
    kinds = sorted(g.kind for g in iter_gens(t))
    assert kinds == ["xm", "xp"]
    ops = serialize_ops(t)
    positions = sorted(p for _, p in ops)
    assert positions == [1, 3]


def test_parse_tangle_errors_report_lines():
    with pytest.raises(TangleError, match="line 1"):
        parse_tangle("nonsense\n")
    with pytest.raises(TangleError, match="line 2"):
        parse_tangle("signs: uu\nxp 2\n")
    with pytest.raises(TangleError, match="line 3"):
        parse_tangle("signs: uu\nv 1\ncapL 1\n")
    with pytest.raises(TangleError, match="overlap"):
        parse_tangle("signs: uuu\nxp 1, xp 2\n")
    with pytest.raises(TangleError, match="omega"):
        parse_tangle("signs: Uu\nxp 1\n")
    with pytest.raises(TangleError):
        parse_tangle("")


def test_parse_tangle_omega_forms():
    # two-position form: explicit omega strand swaps past the alpha strand
    t = parse_tangle("signs: Uu\noxp 1\n")
    g, = iter_gens(t)
    assert g.dom == SignSeq("Uu") and g.cod == SignSeq("uU")
    # operator form on a plain strand
    t2 = parse_tangle("signs: u\noxm 1\n")
    g2, = iter_gens(t2)
    assert g2.dom == SignSeq("u") and g2.cod == SignSeq("u")
    assert has_omega(t) and has_omega(t2)
    assert not has_omega(parse_tangle("signs: uu\nxp 1\n"))


def test_render_parse_roundtrip():
    docs = [
        "signs: uu\nv 1\ncupR 2\ncapR 2\n",
        "signs: u\ncupL 1\nv 2\ncapL 1\n",
        "signs: uuuu\nxp 1, xm 3\nv 2\n",
        "signs: Uu\noxp 1\noxm 1\n",
    ]
    for doc in docs:
        t = parse_tangle(doc)
        r = render_tangle(t)
        t2 = parse_tangle(r)
        assert render_tangle(t2) == r
        assert [(g.kind, p) for g, p in serialize_ops(t2)] == \
               [(g.kind, p) for g, p in serialize_ops(t)]
        assert t2.dom == t.dom and t2.cod == t.cod


def test_curl_builders():
    for side in ("L", "R"):
        c = virtual_curl(side)
        assert c.dom == SignSeq("u") and c.cod == SignSeq("u")
        assert writhe(c) == 0
        k = classical_kink(side, -1)
        assert k.dom == SignSeq("u") and k.cod == SignSeq("u")
        assert writhe(k) == -1


def test_closure_op_stream_shape():
    b = parse_braid(VIRTUAL_TREFOIL)
    ops = serialize_ops(closure(b))
    kinds = [g.kind for g, _ in ops]
    assert kinds == ["cupR", "cupR", "v", "xm", "xm", "capR", "capR"]
    # cups first at 1..N, caps last at N..1
    assert [p for _, p in ops[:2]] == [1, 2]
    assert [p for _, p in ops[-2:]] == [2, 1]


def test_layer_positions():
    slice_ = layer(3, 2, crossing("v", "u", "u"))
    assert slice_.dom == SignSeq("uuu")
    ops = serialize_ops(slice_)
    assert [(g.kind, p) for g, p in ops] == [("v", 2)]
