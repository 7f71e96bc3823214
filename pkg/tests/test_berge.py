from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from berge_ramsey.berge import (
    BergeCertificate,
    BergeClique,
    BergeCycle,
    BergeOf,
    berge_cycle_on_core,
    check_certificate,
    find_berge,
    find_berge_clique,
    find_berge_copy,
    find_berge_cycle,
    find_in_color,
    lift_shadow_clique,
    lift_shadow_cycle,
    parse_certificate,
    parse_families,
    parse_family,
    serialize_certificate,
)
from berge_ramsey.constructions import lower_bound_ccc, turan_partite
from berge_ramsey.errors import FormatError, InvalidArguments, PreconditionViolated
from berge_ramsey.hypergraph import Hypergraph, complete
from berge_ramsey.shadow import BLUE, GREEN, RED, ColoredHypergraph, color_class
from oracles import brute_berge, clique_edges, cycle_edges


def minus(h, removed):
    return Hypergraph.from_edges(h.n, 3, [e for e in h.edges if e not in set(removed)])


@st.composite
def hosts(draw, max_n=6):
    n = draw(st.integers(3, max_n))
    chosen = draw(st.lists(st.sampled_from(list(combinations(range(n), 3))), unique=True))
    return Hypergraph.from_edges(n, 3, chosen)


SPECS = [BergeCycle(3), BergeCycle(4), BergeCycle(5), BergeClique(2), BergeClique(3), BergeClique(4)]


class TestFamilies:
    def test_parse(self):
        assert parse_family("BC:5") == BergeCycle(5)
        assert parse_family(" BK:4 ") == BergeClique(4)
        assert parse_families("BC:4,BC:4,BC:3") == [BergeCycle(4), BergeCycle(4), BergeCycle(3)]
        assert str(BergeClique(7)) == "BK:7"

    @pytest.mark.parametrize("text", ["BC:2", "BK:1", "BX:4", "BC4", "BC:-1"])
    def test_parse_errors(self, text):
        with pytest.raises(InvalidArguments):
            parse_family(text)

    def test_pattern_edge_order(self):
        assert BergeCycle(4).edges == ((0, 1), (1, 2), (2, 3), (3, 0))
        assert BergeClique(3).edges == ((0, 1), (0, 2), (1, 2))
        assert BergeOf([(1, 0), (1, 2)]).edges == ((1, 0), (1, 2))

    def test_malformed_pattern(self):
        with pytest.raises(InvalidArguments):
            BergeOf([(0, 0)])
        with pytest.raises(InvalidArguments):
            BergeOf([(0, 1), (1, 0)])


class TestCycles:
    def test_complete(self):
        h = complete(5, 3)
        cert = find_berge_cycle(h, 5)
        assert cert is not None and check_certificate(h, cert, BergeCycle(5))

    def test_k5_minus_pair_34(self):
        # K_5^3 minus the three triples through the pair {3,4}; vertices v1..v5 are 0..4
        h = minus(complete(5, 3), [(0, 3, 4), (1, 3, 4), (2, 3, 4)])
        core = (0, 1, 4, 2, 3)
        stated = [(0, 1, 3), (1, 2, 4), (0, 2, 4), (1, 2, 3), (0, 2, 3)]
        stated_cert = BergeCertificate(core, tuple(h.index(e) for e in stated), "cycle")
        assert check_certificate(h, stated_cert, BergeCycle(5))
        on_core = berge_cycle_on_core(h, core)
        assert on_core is not None and check_certificate(h, on_core, BergeCycle(5))
        found = find_berge_cycle(h, 5)
        assert found is not None and check_certificate(h, found, BergeCycle(5))

    def test_two_edges(self):
        assert find_berge_cycle(Hypergraph.from_edges(4, 3, [(0, 1, 2), (1, 2, 3)]), 3) is None

    @pytest.mark.parametrize("n", range(4, 9))
    def test_ccc_green_class_has_no_triangle(self, n):
        assert find_in_color(lower_bound_ccc(n).colored, BergeCycle(3), GREEN) is None

    def test_canonical_core(self):
        cert = find_berge_cycle(complete(6, 3), 4)
        assert cert.core == (0, 1, 2, 3)

    def test_bad_length(self):
        with pytest.raises(InvalidArguments):
            find_berge_cycle(complete(4, 3), 2)

    def test_wrong_uniformity(self):
        with pytest.raises(InvalidArguments):
            find_berge_cycle(complete(4, 2), 3)

    def test_edge_restriction_keeps_global_indices(self):
        h = complete(5, 3)
        allowed = [i for i, e in enumerate(h.edges) if 4 not in e]
        cert = find_berge_cycle(h, 4, allowed)
        assert set(cert.assignment) <= set(allowed)
        assert find_berge_cycle(h, 5, allowed) is None


class TestCliques:
    def test_complete(self):
        h = complete(5, 3)
        cert = find_berge_clique(h, 4)
        assert cert is not None and check_certificate(h, cert, BergeClique(4))

    def test_turan_partite_has_no_k5(self):
        assert find_berge_clique(turan_partite(6, 4), 5) is None

    def test_too_few_edges(self):
        h = Hypergraph.from_edges(6, 3, list(combinations(range(6), 3))[:9])
        assert find_berge_clique(h, 5) is None

    def test_k2(self):
        assert find_berge_clique(complete(3, 3), 2).core == (0, 1)

    def test_bad_order(self):
        with pytest.raises(InvalidArguments):
            find_berge_clique(complete(4, 3), 1)


class TestCopies:
    def test_path_needs_two_edges(self):
        assert find_berge_copy(complete(3, 3), [(0, 1), (1, 2)]) is None

    def test_agrees_on_complete_host(self):
        h = complete(5, 3)
        k4 = find_berge_copy(h, clique_edges(4))
        assert k4 is not None and check_certificate(h, k4, BergeOf(clique_edges(4)))
        assert (find_berge_clique(h, 4) is None) == (k4 is None)
        c5 = find_berge_copy(h, cycle_edges(5))
        assert c5 is not None and check_certificate(h, c5, BergeOf(cycle_edges(5)))

    def test_star(self):
        h = Hypergraph.from_edges(5, 3, [(0, 1, 2), (0, 3, 4), (0, 1, 3)])
        star = [(0, 1), (0, 2), (0, 3)]
        cert = find_berge_copy(h, star)
        assert cert is not None and check_certificate(h, cert, BergeOf(star))
        assert find_berge_copy(h, [(0, 1), (0, 2), (0, 3), (0, 4)]) is None


class TestCheckCertificate:
    def setup_method(self):
        self.h = complete(5, 3)
        self.spec = BergeCycle(4)
        self.cert = find_berge_cycle(self.h, 4)

    def test_valid(self):
        assert check_certificate(self.h, self.cert, self.spec).reason == "ok"

    def test_repeated_edge(self):
        a = self.cert.assignment
        bad = BergeCertificate(self.cert.core, (a[0], a[0]) + a[2:], "cycle")
        res = check_certificate(self.h, bad, self.spec)
        assert not res and res.reason == "injectivity"

    def test_missing_pair(self):
        core = self.cert.core
        # an unused edge that misses core[3] cannot host the closing pair
        wrong = next(i for i, e in enumerate(self.h.edges) if core[3] not in e and i not in self.cert.assignment)
        bad = BergeCertificate(core, self.cert.assignment[:3] + (wrong,), "cycle")
        res = check_certificate(self.h, bad, self.spec)
        assert not res and res.reason == "containment"

    @pytest.mark.parametrize("core,assign,reason", [
        ((0, 1, 2), (0, 1, 2, 3), "core-length"),
        ((0, 1, 2, 9), (0, 1, 2, 3), "core-range"),
        ((0, 1, 1, 2), (0, 1, 2, 3), "core-repeat"),
        ((0, 1, 2, 3), (0, 1, 2), "assign-length"),
        ((0, 1, 2, 3), (0, 1, 2, 99), "index-range"),
    ])
    def test_reasons(self, core, assign, reason):
        res = check_certificate(self.h, BergeCertificate(core, assign), self.spec)
        assert not res and res.reason == reason

    def test_color_filter(self):
        ch = ColoredHypergraph.from_rule(self.h, 2, lambda e: RED if 4 not in e else BLUE)
        cert = find_in_color(ch, self.spec, RED)
        assert check_certificate(self.h, cert, self.spec, (ch, RED))
        res = check_certificate(self.h, cert, self.spec, (ch, BLUE))
        assert not res and res.reason == "color"


class TestLiftCycle:
    def test_k4(self):
        ch = ColoredHypergraph.monochromatic(complete(4, 3), 2, RED)
        cert = lift_shadow_cycle(ch, [0, 1, 2, 3], RED)
        assert check_certificate(ch.base, cert, BergeCycle(4), (ch, RED))
        # the assignment spelled out by hand is one valid alternative
        alt = BergeCertificate((0, 1, 2, 3), tuple(ch.base.index(e) for e in
                               [(0, 1, 3), (0, 1, 2), (1, 2, 3), (0, 2, 3)]), "cycle")
        assert check_certificate(ch.base, alt, BergeCycle(4))

    def test_k6(self):
        ch = ColoredHypergraph.monochromatic(complete(6, 3), 2, RED)
        cert = lift_shadow_cycle(ch, range(6), RED)
        assert check_certificate(ch.base, cert, BergeCycle(6), (ch, RED))

    def test_precondition(self):
        h = complete(4, 3)
        # pair {0,1} lies in {0,1,2} (red) and {0,1,3} (blue)
        ch = ColoredHypergraph.from_rule(h, 2, lambda e: BLUE if e == (0, 1, 3) else RED)
        with pytest.raises(PreconditionViolated) as info:
            lift_shadow_cycle(ch, [0, 1, 2, 3], RED)
        assert info.value.pair == (0, 1)

    def test_bad_core(self):
        ch = ColoredHypergraph.monochromatic(complete(4, 3))
        with pytest.raises(InvalidArguments):
            lift_shadow_cycle(ch, [0, 1, 1], 0)


class TestLiftClique:
    def test_k6_core4(self):
        ch = ColoredHypergraph.monochromatic(complete(6, 3), 2, RED)
        cert = lift_shadow_clique(ch, {0, 1, 2, 3}, RED)
        assert len(set(cert.assignment)) == 6
        assert check_certificate(ch.base, cert, BergeClique(4), (ch, RED))

    def test_k5_uses_every_edge(self):
        ch = ColoredHypergraph.monochromatic(complete(5, 3), 1, 0)
        cert = lift_shadow_clique(ch, range(5), 0)
        assert sorted(cert.assignment) == list(range(10))
        assert check_certificate(ch.base, cert, BergeClique(5), (ch, 0))

    def test_precondition(self):
        ch = ColoredHypergraph.monochromatic(complete(4, 3), 2, RED)
        with pytest.raises(PreconditionViolated):
            lift_shadow_clique(ch, [0, 1, 2], RED)


class TestCertificateText:
    def test_round_trip(self):
        cert = BergeCertificate((0, 3, 1), (4, 2, 0), "cycle", 1)
        text = serialize_certificate(cert)
        assert text.splitlines() == ["cert cycle 3 color 1", "core 0 3 1", "assign 4 2 0"]
        assert parse_certificate(text) == (cert, 3)

    def test_uncolored(self):
        text = serialize_certificate(BergeCertificate((0, 1), (0,), "clique"))
        assert text.startswith("cert clique 2\n")

    @pytest.mark.parametrize("text", [
        "cert cycle 3\ncore 0 1 2\n",
        "cert path 3\ncore 0 1 2\nassign 0 1 2\n",
        "cert cycle 3 colour 1\ncore 0 1 2\nassign 0 1 2\n",
        "cert cycle 3\nkern 0 1 2\nassign 0 1 2\n",
        "cert cycle 3\ncore 0 1 x\nassign 0 1 2\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            parse_certificate(text)


@settings(max_examples=150, deadline=None)
@given(hosts(), st.sampled_from(SPECS))
def test_soundness(h, spec):
    cert = find_berge(h, spec)
    if cert is not None:
        assert check_certificate(h, cert, spec)


@settings(max_examples=150, deadline=None)
@given(hosts(max_n=5), st.sampled_from(SPECS))
def test_matches_bruteforce(h, spec):
    expected = brute_berge(h.edges, h.n, spec.edges, spec.order)
    assert (find_berge(h, spec) is None) == (expected is None)


@settings(max_examples=100, deadline=None)
@given(hosts(max_n=6), st.sampled_from(SPECS), st.data())
def test_monotone_under_adding_edges(h, spec, data):
    if find_berge(h, spec) is None:
        return
    missing = [e for e in combinations(range(h.n), 3) if e not in h.edges]
    extra = data.draw(st.lists(st.sampled_from(missing), unique=True)) if missing else []
    bigger = Hypergraph.from_edges(h.n, 3, list(h.edges) + extra)
    assert find_berge(bigger, spec) is not None


@settings(max_examples=100, deadline=None)
@given(hosts(max_n=6), st.sampled_from(SPECS))
def test_general_pattern_agrees(h, spec):
    assert (find_berge_copy(h, BergeOf(spec.edges)) is None) == (find_berge(h, spec) is None)


def test_color_class_detection_uses_base_indices():
    ch = lower_bound_ccc(5).colored
    red = color_class(ch, RED)
    assert find_berge_cycle(red, 3) is not None
    cert = find_in_color(ch, BergeCycle(3), RED)
    assert cert.color == RED and all(ch.coloring[i] == RED for i in cert.assignment)
