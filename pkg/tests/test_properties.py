"""Law-level properties over randomly generated complexes."""

from hypothesis import given
from hypothesis import strategies as st

from cmtkit.core import Face, from_facets
from cmtkit.fields import GF2
from cmtkit.homology import reduced_betti, reduced_euler_from_faces


@st.composite
def complexes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    n_facets = draw(st.integers(1, 5))
    raw = draw(st.lists(
        st.sets(st.integers(0, n - 1), min_size=0, max_size=n),
        min_size=n_facets, max_size=n_facets))
    return from_facets(raw)


@st.composite
def complex_and_face(draw):
    cx = draw(complexes())
    face = draw(st.sampled_from(cx.faces()))
    return cx, face


class TestLinkLaws:
    @given(complex_and_face(), st.data())
    def test_link_of_link(self, cx_face, data):
        cx, sigma = cx_face
        lk = cx.link(sigma)
        tau = data.draw(st.sampled_from(lk.faces()))
        assert lk.link(tau) == cx.link(sigma | tau)

    @given(complex_and_face(), st.data())
    def test_restriction_link_commutation(self, cx_face, data):
        cx, sigma = cx_face
        outside = [v for v in cx.vertex_ids() if v not in sigma]
        removed = data.draw(st.sets(st.sampled_from(outside), min_size=0)
                            if outside else st.just(set()))
        keep = Face.from_mask(cx.support_mask & ~Face(removed).mask)
        assert cx.restrict(keep).link(sigma) == cx.link(sigma).restrict(keep)

    @given(complex_and_face())
    def test_link_faces_match_definition(self, cx_face):
        cx, sigma = cx_face
        lk = cx.link(sigma)
        expected = {f.mask for f in cx.faces()
                    if f.mask & sigma.mask == 0 and cx.contains(f | sigma)}
        assert {f.mask for f in lk.faces()} == expected


class TestSkeletonLaws:
    @given(complexes(), st.integers(-1, 6))
    def test_idempotent(self, cx, j):
        sk = cx.skeleton(j)
        assert sk.skeleton(j) == sk

    @given(complexes(), st.integers(-1, 5))
    def test_monotone_under_inclusion(self, cx, j):
        small = {f.mask for f in cx.skeleton(j).faces()}
        big = {f.mask for f in cx.skeleton(j + 1).faces()}
        assert small <= big

    @given(complexes())
    def test_skeleton_at_dim_is_identity(self, cx):
        assert cx.skeleton(cx.dim) == cx


class TestJoinLaws:
    @given(complexes(max_n=4), complexes(max_n=4))
    def test_dimension(self, a, b):
        assert a.join(b).dim == a.dim + b.dim + 1

    @given(complexes(max_n=4))
    def test_irrelevant_identity(self, a):
        assert a.join(from_facets([()])) == a

    @given(complexes(max_n=3), complexes(max_n=3), complexes(max_n=3))
    def test_associative_up_to_relabeling(self, a, b, c):
        left = a.join(b).join(c)
        right = a.join(b.join(c))
        assert {f.mask for f in left.facets} == {f.mask for f in right.facets}
        assert left.n_vertices == right.n_vertices


class TestConstructors:
    @given(complexes())
    def test_from_facets_idempotent_on_own_output(self, cx):
        rebuilt = from_facets([f.vertices for f in cx.facets], labels=cx.labels)
        assert rebuilt == cx.compact()

    @given(complexes())
    def test_faces_agree_with_contains_oracle(self, cx):
        # brute force: test every subset of the ambient space
        n = cx.n_vertices
        expected = {m for m in range(1 << n)
                    if cx.contains(Face.from_mask(m))}
        assert {f.mask for f in cx.faces()} == expected

    @given(complexes(), st.data())
    def test_delete_cofaces_is_a_face_filter(self, cx, data):
        sigmas = data.draw(st.lists(st.sampled_from(cx.faces()), min_size=1, max_size=3))
        result, _ = cx.delete_cofaces(sigmas)
        expected = {f.mask for f in cx.faces()
                    if not any(s.mask & f.mask == s.mask for s in sigmas)}
        got = set() if result.is_void else {f.mask for f in result.faces()}
        assert got == expected


class TestHomologyLaws:
    @given(complexes(max_n=5))
    def test_boundary_squared_zero(self, cx):
        from cmtkit.homology import boundary_matrices
        mats = boundary_matrices(cx)
        for a, b in zip(mats, mats[1:]):
            assert not (a.matrix @ b.matrix).any()

    @given(complexes(max_n=5))
    def test_euler_consistency(self, cx):
        assert reduced_betti(cx, GF2).reduced_euler() == reduced_euler_from_faces(cx)

    @given(complexes(max_n=4))
    def test_cone_acyclic(self, cx):
        cone = cx.join(from_facets([(0,)]))
        assert not reduced_betti(cone, GF2).nonzero()
