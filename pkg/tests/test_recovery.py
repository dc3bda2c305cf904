import pytest

from cyclic_covers import (
    BlockStructureViolation,
    Hypersurface,
    NotACoverShape,
    NotAnEquivalence,
    ProjectivePoint,
    ProjectiveTransform,
    apply_linear,
    base_equivalence,
    canonical_scalar,
    cover_equation,
    cyclic_cover,
    deck_transform,
    equivalent_structured,
    extension_field,
    prime_field,
    random_invertible,
    recover_branch,
    smoothness_certificate,
    transposition,
    verify_equivalence,
)
from cyclic_covers.census import random_form
from cyclic_covers.rng import SplitMix64

F7, F13 = prime_field(7), prime_field(13)
FERMAT = "x0^3+x1^3+x2^3"


def test_recover_plain_cover():
    Y = Hypersurface.from_text("x0^3+2*x0*x1*x2+x1^3+5*x2^3", 3, F13)
    rec = recover_branch(cyclic_cover(Y))
    assert rec.branch == Y
    assert rec.galois_point == ProjectivePoint.standard(F13, 4, 3)


def test_recover_fermat_surface_with_hint():
    H = Hypersurface.from_text("x0^3+x1^3+x2^3+x3^3", 4, F13)
    rec = recover_branch(H, hint=ProjectivePoint.parse(F13, "0,0,0,1"))
    assert rec.branch == Hypersurface.from_text(FERMAT, 3, F13)
    assert rec.to_json()["galois_point_used"] == ["0", "0", "0", "1"]


def test_recover_rejects_non_galois_hint():
    H = Hypersurface.from_text("x0^3+x1^3+x2^3+3*x0*x1*x2", 3, F7)
    with pytest.raises(NotACoverShape):
        recover_branch(H, hint=ProjectivePoint.parse(F7, "0,0,1"))


def test_recover_witness_reproduces_cover_shape():
    rng = SplitMix64(3)
    for seed in range(5):
        F = random_form(F13, 3, 4, rng)
        Y = Hypersurface(F)
        g = random_invertible(F13, 5, seed)
        H = Hypersurface(apply_linear(cover_equation(Y.equation), g))
        rec = recover_branch(H)
        lhs = canonical_scalar(apply_linear(H.equation, rec.witness))
        assert lhs == canonical_scalar(cover_equation(rec.base))


def test_round_trip_cubic_surfaces_f13():
    rng = SplitMix64(17)
    done = 0
    while done < 6:
        F = random_form(F13, 3, 4, rng)
        if F.is_zero() or not smoothness_certificate(Hypersurface(F), 1).clean:
            continue
        Y = Hypersurface(F)
        g = random_invertible(F13, 5, rng.next_u64())
        H = Hypersurface(apply_linear(cover_equation(Y.equation), g))
        rec = recover_branch(H)
        T = base_equivalence(Y, rec.branch, g @ rec.witness)
        assert verify_equivalence(Y, rec.branch, T)
        done += 1


def test_base_equivalence_identity():
    Y = Hypersurface.from_text(FERMAT, 3, F7)
    assert base_equivalence(Y, Y, ProjectiveTransform.identity(F7, 4)).is_identity()


def test_base_equivalence_deck_gives_identity():
    Y = Hypersurface.from_text(FERMAT, 3, F7)
    assert base_equivalence(Y, Y, deck_transform(cyclic_cover(Y))).is_identity()


def test_base_equivalence_block_transposition():
    Y = Hypersurface.from_text(FERMAT, 3, F7)
    T = base_equivalence(Y, Y, transposition(F7, 4, 0, 1))
    assert T == transposition(F7, 3, 0, 1)


def test_base_equivalence_moves_galois_point():
    # g swaps x2 and x3 with the scaling 3 (3^3 = -1 mod 7); it is an
    # automorphism of the cover that sends [0:0:0:1] to [0:0:1:0].
    Y = Hypersurface.from_text(FERMAT, 3, F7)
    rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 3], [0, 0, 3, 0]]
    g = ProjectiveTransform(F7, rows)
    C = cover_equation(Y.equation)
    assert canonical_scalar(apply_linear(C, g)) == canonical_scalar(C)
    T = base_equivalence(Y, Y, g)
    assert verify_equivalence(Y, Y, T)


def test_base_equivalence_lifts_to_extension():
    # Swapping x2 and x3 carries the cover of x0^3+x1^3+2*x2^3 to a cover of
    # x0^3+x1^3-x2^3.  The bases are inequivalent over F_7 (different point
    # counts) but equivalent over F_343, where the needed cube root lives.
    Y1 = Hypersurface.from_text("x0^3+x1^3+2*x2^3", 3, F7)
    Y2 = Hypersurface.from_text("x0^3+x1^3-x2^3", 3, F7)
    T = base_equivalence(Y1, Y2, transposition(F7, 4, 2, 3))
    assert T.field == extension_field(7, 3)
    assert verify_equivalence(Y1, Y2, T)
    assert equivalent_structured(Y1, Y2).verdict == "inequivalent"


def test_base_equivalence_rejects_non_equivalence():
    Y = Hypersurface.from_text(FERMAT, 3, F7)
    Z = Hypersurface.from_text("x0^3+x1^3+x2^3+x0*x1*x2", 3, F7)
    with pytest.raises(NotAnEquivalence):
        base_equivalence(Y, Z, ProjectiveTransform.identity(F7, 4))


def test_block_structure_violation_is_a_falsification():
    assert issubclass(BlockStructureViolation, Exception)
    assert BlockStructureViolation("x", {"seed": 1}).bundle == {"seed": 1}
