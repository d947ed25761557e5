from duvalk3.ade import ADEType, Basket
from duvalk3.catalog import embedded_catalog
from duvalk3.search import (
    enumerate_baskets,
    enumerate_k3_hypersurfaces,
    find_signature,
)
from duvalk3.threefolds import sigma_k3


def count_baskets_oracle(max_total):
    """Independent multiset count: unbounded-multiplicity coin counting."""
    ranks = [("A", r) for r in range(1, max_total + 1)]
    ranks += [("D", r) for r in range(4, max_total + 1)]
    ranks += [("E", r) for r in (6, 7, 8) if r <= max_total]
    dp = [0] * (max_total + 1)
    dp[0] = 1
    for _, rank in ranks:
        for total in range(rank, max_total + 1):
            dp[total] += dp[total - rank]
    return sum(dp)


class TestEnumerateBaskets:
    def test_up_to_one_curve(self):
        assert enumerate_baskets(1) == [
            (Basket(), -16),
            (Basket((ADEType("A", 1),)), -15),
        ]

    def test_zero(self):
        assert enumerate_baskets(0) == [(Basket(), -16)]

    def test_contains_d4(self):
        assert (Basket((ADEType("D", 4),)), -12) in enumerate_baskets(4)

    def test_count_against_independent_oracle(self):
        for bound in (5, 10, 19):
            assert len(enumerate_baskets(bound)) == count_baskets_oracle(bound)

    def test_deterministic_and_consistent(self):
        out = enumerate_baskets(7)
        assert out == enumerate_baskets(7)
        for b, sigma in out:
            assert sigma == sigma_k3(b) == -16 + b.total_d
            assert b.total_d <= 7

    def test_sigma_range_at_full_bound(self):
        sigmas = {sigma for _, sigma in enumerate_baskets(19)}
        assert sigmas == set(range(-16, 4))


class TestEnumerateK3Hypersurfaces:
    def test_small_bound_contains_known_rows(self):
        families = enumerate_k3_hypersurfaces(8)
        by_weights = {fam.family.weights.a: fam for fam in families}
        quartic = by_weights[(1, 1, 1, 1)]
        assert quartic.basket == Basket()
        assert quartic.sigma == -16
        f5 = by_weights[(1, 1, 1, 2)]
        assert f5.basket == Basket.parse("A_1")
        assert f5.sigma == -15

    def test_rows_reverify(self):
        for fam in enumerate_k3_hypersurfaces(10):
            assert fam.family.is_canonical_trivial
            assert fam.sigma == -16 + fam.basket.total_d
            assert fam.basket.total_d <= 19

    def test_sorted_and_parallel_agreement(self):
        serial = enumerate_k3_hypersurfaces(12)
        weights = [fam.family.weights.a for fam in serial]
        assert weights == sorted(weights)
        assert serial == enumerate_k3_hypersurfaces(12, jobs=2)

    def test_to_row_round_trips_through_catalog_grammar(self):
        from duvalk3.catalog import load_catalog

        fam = enumerate_k3_hypersurfaces(4)[0]
        row = fam.to_row()
        assert load_catalog(row.format()) == [row]


class TestFindSignature:
    def test_minus_sixteen_contains_quartic(self):
        hits = find_signature(-16, 6)
        assert any(fam.family.weights.a == (1, 1, 1, 1) for fam in hits)

    def test_minus_twelve_unrealized_in_codim_one(self):
        assert find_signature(-12, 20) == []

    def test_catalog_families_found(self):
        # every codim-1 catalog row is recovered by the search at its weight
        for row in embedded_catalog():
            if row.codim != 1:
                continue
            hits = find_signature(row.sigma, max(row.weights))
            assert any(
                fam.family.weights.a == row.weights and fam.basket == row.basket
                for fam in hits
            ), row.name
