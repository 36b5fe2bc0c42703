import pytest

from imlkit.fixtures import delta_violation_model, one_world_frame, shared_neighborhood_frame
from imlkit.nmodel import Condition, NFrame
from imlkit.search import enumerate_frames
from imlkit.topology import OpenFamily, Variant, open_sets, verify_topology


def naive_opens(frame, w):
    universe = frame.max_of(w)
    out = []
    for bits in range(1 << len(frame.worlds)):
        x = {frame.worlds[i] for i in range(len(frame.worlds)) if bits >> i & 1}
        if x <= universe and all(frame.min_of(v) <= x for v in x):
            out.append(sorted(x))
    return sorted(out, key=lambda s: (len(s), s))


def test_examples():
    assert open_sets(shared_neighborhood_frame(), "w").sets() == [[], ["v", "w"]]
    assert open_sets(one_world_frame(), "w").sets() == [[], ["w"]]


def test_unknown_world():
    with pytest.raises(KeyError):
        open_sets(one_world_frame(), "x")


def test_matches_naive_filter_on_t_frames():
    for frame in enumerate_frames(3, [Condition.T]):
        for w in frame.worlds:
            assert open_sets(frame, w).sets() == naive_opens(frame, w)


def test_t_frames_give_topologies():
    for frame in enumerate_frames(3, [Condition.T]):
        for w in frame.worlds:
            assert verify_topology(open_sets(frame, w)).ok


def test_without_t_the_universe_can_fail():
    # v is visible from w but min(v) reaches z, outside max(w)
    frame = NFrame.from_sets("wvz", {"w": "w", "v": "vz", "z": "z"}, {"w": "wv", "v": "vz", "z": "z"})
    report = verify_topology(open_sets(frame, "w"))
    assert report["universe"].witness == ("w", "{w,v}")


def test_alternative_variant_is_always_a_topology():
    for n in (1, 2, 3):
        for frame in enumerate_frames(n):
            for w in frame.worlds:
                fam = open_sets(frame, w, Variant.ALTERNATIVE)
                assert verify_topology(fam).ok
                assert all(not s or frame.min_of(w) <= set(s) for s in fam.sets())


def test_empty_family_fails_universe():
    frame = delta_violation_model().frame
    fam = OpenFamily(frame, "w", frame.max[0], frozenset({0}), Variant.PAPER)
    report = verify_topology(fam)
    assert report["universe"] is not None and report["empty"] is None


def test_alexandroff_per_point_check_catches_missing_meet():
    frame = NFrame.from_sets("abc", {x: x for x in "abc"}, {x: "abc" for x in "abc"})
    ab, bc = frame.mask_of("ab"), frame.mask_of("bc")
    fam = OpenFamily(frame, "a", frame.full, frozenset({0, ab, bc, frame.full}), Variant.PAPER)
    report = verify_topology(fam)
    assert report["intersection"] is not None
    assert report["alexandroff"].witness == ("a", "b", "{b}")


def test_variant_names():
    assert Variant.parse("alt") is Variant.ALTERNATIVE
    with pytest.raises(ValueError):
        Variant.parse("other")
