"""Cross-module invariant suite backing the ``verify all`` command.

Each check re-derives one documented invariant, usually pitting two
independent computation routes against each other (character recursion vs
matrix traces, closed-form counts vs exhaustive enumeration, statevector
norms vs the character formula).  Checks return a result record; the CLI
prints one line per check and exits nonzero if any fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import characters, cyclotomic, dihedral, graphs, partitions, products, repops, sampling
from .permutation import Permutation, all_permutations, compose, cycle_type


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _result(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, ok=ok, detail=detail)


def _cap(stated: int, max_n: int | None) -> int:
    return stated if max_n is None else min(stated, max_n)


# -- core algebra ------------------------------------------------------------


def check_compose_associativity(max_n) -> CheckResult:
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, _cap(8, max_n))
        p, q, r = (_random_perm(rng, n) for _ in range(3))
        if compose(compose(p, q), r) != compose(p, compose(q, r)):
            return _result("compose-associativity", False, f"failed at {p}, {q}, {r}")
    return _result("compose-associativity", True, "300 random triples")


def _random_perm(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def check_cycle_type_conjugation(max_n) -> CheckResult:
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randint(1, _cap(8, max_n))
        p, q = _random_perm(rng, n), _random_perm(rng, n)
        if cycle_type(q * p * q.inverse()) != cycle_type(p):
            return _result("cycle-type-conjugation", False, f"failed at {p}, {q}")
    return _result("cycle-type-conjugation", True, "300 random conjugations")


def check_vanishing_root_sums(max_n) -> CheckResult:
    top = _cap(64, max_n if max_n is None else max(max_n, 16))
    for order in range(2, top + 1):
        for k in range(order):
            total = cyclotomic.cyc(0)
            for l in range(order):
                total = total + cyclotomic.cyclotomic_root(order, k * l)
            expected_zero = k % order != 0
            if expected_zero != total.is_zero():
                return _result("vanishing-root-sums", False, f"N={order}, k={k}")
            if not expected_zero and total != order:
                return _result("vanishing-root-sums", False, f"N={order}, k=0 sum != N")
    return _result("vanishing-root-sums", True, f"orders 2..{top}, all k")


def check_cyclotomic_float_agreement(max_n) -> CheckResult:
    rng = random.Random(17)
    for trial in range(1000):
        order = rng.randint(1, 24)
        exact = cyclotomic.cyc(rng.randint(-3, 3), order)
        approx = complex(exact.to_complex())
        for _ in range(rng.randint(1, 6)):
            op = rng.choice(("add", "sub", "mul"))
            term = cyclotomic.cyclotomic_root(order, rng.randint(0, 2 * order))
            scale = rng.randint(-2, 2)
            term = term * scale
            if op == "add":
                exact, approx = exact + term, approx + term.to_complex()
            elif op == "sub":
                exact, approx = exact - term, approx - term.to_complex()
            else:
                exact, approx = exact * term, approx * term.to_complex()
        if abs(exact.to_complex() - approx) > 1e-9:
            return _result("cyclotomic-float-agreement", False, f"trial {trial}")
    return _result("cyclotomic-float-agreement", True, "1000 randomized expressions")


def check_partition_counts(max_n) -> CheckResult:
    top = _cap(40, max_n if max_n is None else max(max_n, 20))
    for n in range(1, top + 1):
        if len(partitions.partitions_of(n)) != partitions.partition_count(n):
            return _result("partition-count-recurrence", False, f"n={n}")
    return _result("partition-count-recurrence", True, f"n <= {top}")


# -- symmetric group characters ----------------------------------------------


def check_burnside_identity(max_n) -> CheckResult:
    for n in range(1, _cap(10, max_n) + 1):
        if not characters.regular_dimension_check(n):
            return _result("burnside-dimension-identity", False, f"n={n}")
    return _result("burnside-dimension-identity", True, f"n <= {_cap(10, max_n)}")


def check_mn_dimension_column(max_n) -> CheckResult:
    for n in range(1, _cap(10, max_n) + 1):
        identity_class = (1,) * n
        for shape in partitions.partitions_of(n):
            if characters.mn_character(shape, identity_class) != characters.hook_dimension(shape):
                return _result("mn-dimension-column", False, f"{shape}")
    return _result("mn-dimension-column", True, f"n <= {_cap(10, max_n)}")


def check_table_orthogonality(max_n) -> CheckResult:
    for n in range(2, _cap(9, max_n) + 1):
        table = characters.character_table(n)
        order = factorial(n)
        rows = len(table.rows)
        for i in range(rows):
            for j in range(i, rows):
                total = sum(
                    size * a * b
                    for size, a, b in zip(table.class_sizes, table.entries[i], table.entries[j])
                )
                if total != (order if i == j else 0):
                    return _result("table-row-orthogonality", False, f"n={n} rows {i},{j}")
        for a in range(rows):
            for b in range(a, rows):
                total = sum(table.entries[i][a] * table.entries[i][b] for i in range(rows))
                expected = order // table.class_sizes[a] if a == b else 0
                if total != expected:
                    return _result("table-row-orthogonality", False, f"n={n} cols {a},{b}")
    return _result("table-row-orthogonality", True, f"rows+cols exact, n <= {_cap(9, max_n)}")


def check_yor_traces(max_n) -> CheckResult:
    rng = random.Random(23)
    for n in range(2, _cap(6, max_n) + 1):
        for shape in partitions.partitions_of(n):
            irrep = characters.yor_matrices(shape, n)
            for _ in range(200):
                g = _random_perm(rng, n)
                expected = characters.mn_character(shape, cycle_type(g))
                if abs(irrep.character(g) - expected) > 1e-9:
                    return _result("yor-traces-match-mn", False, f"{shape} at {g}")
    return _result("yor-traces-match-mn", True, f"200 random per irrep, n <= {_cap(6, max_n)}")


def check_mn_class_function(max_n) -> CheckResult:
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randint(2, _cap(8, max_n))
        g, q = _random_perm(rng, n), _random_perm(rng, n)
        conj = q * g * q.inverse()
        for shape in partitions.partitions_of(n)[:4]:
            if characters.mn_character(shape, cycle_type(g)) != characters.mn_character(
                shape, cycle_type(conj)
            ):
                return _result("mn-class-function", False, f"{shape}, {g}, {q}")
    return _result("mn-class-function", True, "200 conjugation fuzz cases")


# -- dihedral groups ----------------------------------------------------------


def check_dihedral_embedding(max_n) -> CheckResult:
    for n in range(3, _cap(10, max_n) + 1):
        elements = dihedral.dihedral_elements(n)
        images = {g: dihedral.as_permutation(g) for g in elements}
        if len(set(images.values())) != 2 * n:
            return _result("dihedral-embedding", False, f"not injective at n={n}")
        for a in elements:
            for b in elements:
                if images[a * b] != images[a] * images[b]:
                    return _result("dihedral-embedding", False, f"n={n}: {a} * {b}")
    return _result("dihedral-embedding", True, f"all pairs, n <= {_cap(10, max_n)}")


def check_dihedral_irrep_relations(max_n) -> CheckResult:
    for n in range(3, _cap(24, max_n) + 1):
        x, y = dihedral.dihedral_x(n), dihedral.dihedral_y(n)
        for rho in dihedral.dihedral_irreps(n):
            eye = cyclotomic.CycMatrix.identity(rho.dimension)
            mx, my = rho.matrix(x), rho.matrix(y)
            power = eye
            for _ in range(n):
                power = power @ mx
            xy = mx @ my
            if power != eye or my @ my != eye or xy @ xy != eye:
                return _result("dihedral-irrep-relations", False, f"n={n}, {rho.label}")
            if rho.matrix(x * y) != xy:
                return _result("dihedral-irrep-relations", False, f"homomorphism n={n}")
    return _result("dihedral-irrep-relations", True, f"defining relations, n <= {_cap(24, max_n)}")


def check_dihedral_irrep_counts(max_n) -> CheckResult:
    for n in range(3, _cap(24, max_n) + 1):
        irreps = dihedral.dihedral_irreps(n)
        if len(irreps) != dihedral.conjugacy_class_count(n):
            return _result("dihedral-irrep-count", False, f"n={n}")
        if sum(r.dimension**2 for r in irreps) != 2 * n:
            return _result("dihedral-irrep-count", False, f"dimension sum n={n}")
    return _result("dihedral-irrep-count", True, f"count and Burnside, n <= {_cap(24, max_n)}")


def check_dihedral_class_functions(max_n) -> CheckResult:
    for n in range(3, _cap(12, max_n) + 1):
        view = repops.dihedral_group_view(n)
        for rho in dihedral.dihedral_irreps(n):
            chi = repops.irrep_character(view, rho)
            if not chi.is_class_function():
                return _result("dihedral-class-functions", False, f"n={n}, {rho.label}")
        if len(view.conjugacy_classes()) != dihedral.conjugacy_class_count(n):
            return _result("dihedral-class-functions", False, f"class count n={n}")
    return _result("dihedral-class-functions", True, f"n <= {_cap(12, max_n)}")


def check_subgroup_catalog(max_n) -> CheckResult:
    for n in range(3, _cap(12, max_n) + 1):
        catalog = dihedral.subgroup_catalog(n)
        sets = [frozenset(sub.elements) for sub in catalog]
        if len(set(sets)) != len(sets):
            return _result("dihedral-subgroup-catalog", False, f"duplicates at n={n}")
        brute = _brute_force_subgroups(n)
        if set(sets) != brute:
            return _result("dihedral-subgroup-catalog", False, f"mismatch at n={n}")
        for sub in catalog:
            if sub.order * sub.index != 2 * n:
                return _result("dihedral-subgroup-catalog", False, f"index law n={n}")
    return _result("dihedral-subgroup-catalog", True, f"matches brute force, n <= {_cap(12, max_n)}")


def _brute_force_subgroups(n: int) -> set[frozenset]:
    """Closures of all generator sets of size <= 2 (subgroups here need <= 2)."""
    elements = dihedral.dihedral_elements(n)
    found: set[frozenset] = set()
    for a in elements:
        for b in elements:
            closure = {dihedral.dihedral_identity(n)}
            frontier = {a, b}
            while frontier:
                closure |= frontier
                frontier = {
                    g * h for g in closure for h in closure if g * h not in closure
                }
            found.add(frozenset(closure))
    return found


# -- representation operations -------------------------------------------------


def check_frobenius_symmetric(max_n) -> CheckResult:
    for n in range(3, _cap(6, max_n) + 1):
        ambient = repops.symmetric_group_view(n)
        sub = repops.dihedral_in_symmetric_view(n)
        psi = repops.trivial_character(sub)
        for shape in partitions.partitions_of(n):
            chi = repops.ClassFunction(
                ambient,
                {g: characters.mn_character(shape, cycle_type(g)) for g in ambient.elements},
            )
            outcome = repops.frobenius_check(psi, chi)
            if not outcome.equal:
                return _result("frobenius-symmetric", False, f"n={n}, {shape}")
    return _result("frobenius-symmetric", True, f"D_n inside S_n, n <= {_cap(6, max_n)}")


def check_frobenius_dihedral(max_n) -> CheckResult:
    for n in range(3, _cap(10, max_n) + 1):
        group = repops.dihedral_group_view(n)
        irrep_chars = [repops.irrep_character(group, rho) for rho in dihedral.dihedral_irreps(n)]
        for sub in dihedral.subgroup_catalog(n):
            view = repops.subgroup_view(group, sub.elements, name=sub.label())
            psi = repops.trivial_character(view)
            for chi in irrep_chars:
                outcome = repops.frobenius_check(psi, chi)
                if not outcome.equal:
                    return _result("frobenius-dihedral", False, f"n={n}, {sub.label()}")
    return _result("frobenius-dihedral", True, f"all subgroup/irrep pairs, n <= {_cap(10, max_n)}")


def check_induced_identity_value(max_n) -> CheckResult:
    for n in range(3, _cap(10, max_n) + 1):
        group = repops.dihedral_group_view(n)
        for sub in dihedral.subgroup_catalog(n):
            view = repops.subgroup_view(group, sub.elements)
            induced = repops.induce_character(repops.trivial_character(view), group)
            if cyclotomic.cyc(induced.values[group.identity]) != sub.index:
                return _result("induced-identity-is-index", False, f"n={n}, {sub.label()}")
    return _result("induced-identity-is-index", True, f"n <= {_cap(10, max_n)}")


def check_induced_dimension_count(max_n) -> CheckResult:
    for n in range(3, _cap(10, max_n) + 1):
        group = repops.dihedral_group_view(n)
        irreps = dihedral.dihedral_irreps(n)
        for sub in dihedral.subgroup_catalog(n):
            view = repops.subgroup_view(group, sub.elements)
            one = repops.trivial_character(view)
            total = 0
            for rho in irreps:
                chi = repops.irrep_character(group, rho)
                total += rho.dimension * repops.multiplicity(repops.restrict(chi, view), one)
            if total != sub.index:
                return _result("induced-dimension-count", False, f"n={n}, {sub.label()}")
    return _result("induced-dimension-count", True, f"n <= {_cap(10, max_n)}")


def check_tensor_norm(max_n) -> CheckResult:
    for m, n in ((3, 4), (4, 4), (4, 6), (5, 6)):
        if m > _cap(6, max_n) or n > _cap(6, max_n):
            continue
        view_m = repops.dihedral_group_view(m)
        view_n = repops.dihedral_group_view(n)
        for rho_m in dihedral.dihedral_irreps(m)[:3]:
            for rho_n in dihedral.dihedral_irreps(n)[:3]:
                chi_m = repops.irrep_character(view_m, rho_m)
                chi_n = repops.irrep_character(view_n, rho_n)
                tensor = repops.tensor_character(chi_m, chi_n)
                left = repops.inner_product(tensor, tensor)
                right = repops.inner_product(chi_m, chi_m) * repops.inner_product(chi_n, chi_n)
                if left != right:
                    return _result("tensor-norm-product", False, f"{m},{n}")
    return _result("tensor-norm-product", True, "dihedral factor pairs")


# -- sampling ------------------------------------------------------------------


def check_statevector_matches_formula(max_n) -> CheckResult:
    for n in range(3, _cap(16, max_n) + 1):
        for sub in dihedral.subgroup_catalog(n):
            by_formula = sampling.dihedral_label_distribution(n, sub.elements)
            by_statevector = sampling.dihedral_statevector_distribution(n, sub.elements)
            if by_formula.probabilities != by_statevector.probabilities:
                return _result("statevector-matches-formula", False, f"n={n}, {sub.label()}")
            if not by_statevector.is_normalized():
                return _result("statevector-matches-formula", False, f"normalization n={n}")
    return _result("statevector-matches-formula", True, f"all subgroups, n <= {_cap(16, max_n)}")


def check_cycle_auto_zeros(max_n) -> CheckResult:
    top = _cap(64, max_n if max_n is None else max(max_n, 16))
    for n in range(3, top + 1):
        dist = sampling.cycle_auto_distribution(n, mode="paper")
        expected_total = Fraction(2 * n, factorial(n))
        if dist.total() != expected_total:
            return _result("cycle-auto-zeros", False, f"total at n={n}")
        for label, prob in dist.probabilities.items():
            if label == "trivial":
                if prob != expected_total:
                    return _result("cycle-auto-zeros", False, f"trivial at n={n}")
            elif prob != 0:
                return _result("cycle-auto-zeros", False, f"{label} at n={n}")
    return _result("cycle-auto-zeros", True, f"exact zeros, n <= {top}")


def check_ambient_normalization(max_n) -> CheckResult:
    for n in range(3, _cap(6, max_n) + 1):
        dist = sampling.cycle_auto_distribution(n, mode="ambient")
        if not dist.is_normalized():
            return _result("ambient-normalization", False, f"n={n}")
    return _result("ambient-normalization", True, f"n <= {_cap(6, max_n)}")


def check_gi_gap_trend(max_n) -> CheckResult:
    caps = [m for m in range(1, _cap(6, max_n) + 1)]
    values = [sampling.gi_gap(m).tv_distance for m in caps]
    for m, result in zip(caps, (sampling.gi_gap(m) for m in caps)):
        if result.isomorphic_free.total() != 1 or result.isomorphic_swap.total() != 1:
            return _result("gi-gap-trend", False, f"normalization at 2n={2 * m}")
    for earlier, later in zip(values, values[1:]):
        if later > earlier:
            return _result("gi-gap-trend", False, "tv increased")
    for m in caps:
        if not sampling.gi_gap_bound_report(m).bound_holds:
            return _result("gi-gap-trend", False, f"bound violated at {m}")
    return _result("gi-gap-trend", True, f"tv non-increasing, degrees 2..{2 * caps[-1]}")


def check_coset_independence(max_n) -> CheckResult:
    full_range = range(3, _cap(8, max_n) + 1)
    for n in full_range:
        group = repops.dihedral_group_view(n)
        irreps = dihedral.dihedral_irreps(n)
        for sub in dihedral.subgroup_catalog(n):
            hidden = repops.subgroup_view(group, sub.elements)
            baseline = sampling.statevector_weak_sampling(group, irreps, hidden)
            for c in group.elements:
                moved = sampling.statevector_weak_sampling(group, irreps, hidden, coset_rep=c)
                if moved.probabilities != baseline.probabilities:
                    return _result("coset-independence", False, f"n={n}, c={c}")
    for n in (12, 16, 24):
        if max_n is not None and n > max_n:
            continue
        group = repops.dihedral_group_view(n)
        irreps = dihedral.dihedral_irreps(n)
        spot = [sub for sub in dihedral.subgroup_catalog(n) if sub.order in (n, 2)][:2]
        for sub in spot:
            hidden = repops.subgroup_view(group, sub.elements)
            baseline = sampling.statevector_weak_sampling(group, irreps, hidden)
            for c in group.elements:
                moved = sampling.statevector_weak_sampling(group, irreps, hidden, coset_rep=c)
                if moved.probabilities != baseline.probabilities:
                    return _result("coset-independence", False, f"n={n}, c={c}")
    return _result("coset-independence", True, "all representatives, |G| <= 48")


def check_strong_sampling(max_n) -> CheckResult:
    for n in range(3, _cap(12, max_n) + 1):
        report = sampling.strong_sampling_note(n)
        if not report.consistent:
            return _result("strong-sampling-entries", False, f"n={n}")
        nonzero = [e for e in report.entries if not e.label_probability_zero]
        if [e.label for e in nonzero] != ["trivial"]:
            return _result("strong-sampling-entries", False, f"support at n={n}")
    return _result("strong-sampling-entries", True, f"n <= {_cap(12, max_n)}")


# -- graphs --------------------------------------------------------------------


def check_cycle_graph_aut(max_n) -> CheckResult:
    for n in range(3, _cap(8, max_n) + 1):
        aut = graphs.brute_force_aut(graphs.cycle_graph(n))
        if aut.order != 2 * n:
            return _result("cycle-graph-aut", False, f"order at n={n}")
        members = set(aut.elements)
        x_image = dihedral.as_permutation(dihedral.dihedral_x(n))
        y_image = dihedral.as_permutation(dihedral.dihedral_y(n))
        if x_image not in members or y_image not in members:
            return _result("cycle-graph-aut", False, f"missing generator image n={n}")
    return _result("cycle-graph-aut", True, f"order 2n and generators, n <= {_cap(8, max_n)}")


def check_union_aut_structure(max_n) -> CheckResult:
    top = _cap(6, max_n)
    for m in range(3, top + 1):
        for n in range(m + 1, top + 1):
            union = graphs.disjoint_union(graphs.cycle_graph(m), graphs.cycle_graph(n))
            aut = graphs.brute_force_aut(union)
            if aut.order != 4 * m * n:
                return _result("union-aut-structure", False, f"order at ({m},{n})")
            expected = {
                _embed_pair(a, b, m, n)
                for a in dihedral.dihedral_elements(m)
                for b in dihedral.dihedral_elements(n)
            }
            if set(aut.elements) != expected:
                return _result("union-aut-structure", False, f"structure at ({m},{n})")
    return _result("union-aut-structure", True, f"D_m x D_n structure, m < n <= {top}")


def _embed_pair(a, b, m: int, n: int) -> Permutation:
    pa = dihedral.as_permutation(a)
    pb = dihedral.as_permutation(b)
    images = [pa(i) for i in range(1, m + 1)] + [pb(i) + m for i in range(1, n + 1)]
    return Permutation(tuple(images))


def check_reduction_agrees_with_aut(max_n) -> CheckResult:
    top = _cap(6, max_n)
    tested = 0
    for n in range(2, top + 1):
        for graph in graphs.all_graphs_up_to_iso(n):
            has_symmetry = graphs.brute_force_aut(graph).order > 1
            if graphs.ga_gi_turing_reduction(graph) != has_symmetry:
                return _result("reduction-agrees-with-aut", False, f"{graph}")
            tested += 1
    return _result("reduction-agrees-with-aut", True, f"{tested} graphs, <= {top} vertices")


def check_hsp_promise(max_n) -> CheckResult:
    cases = [graphs.cycle_graph(n) for n in range(3, _cap(6, max_n) + 1)]
    cases.append(graphs.disjoint_union(graphs.cycle_graph(3), graphs.cycle_graph(3)))
    if _cap(6, max_n) >= 6:
        cases.append(graphs.find_rigid_graph(6))
    for graph in cases:
        instance = graphs.hsp_instance_from_graph(graph)
        if not instance.verify_promise():
            return _result("hsp-promise", False, f"{graph.vertex_count} vertices")
        distinct = len({instance.oracle(g) for g in instance.ambient.elements})
        if distinct * instance.hidden.order != instance.ambient.order:
            return _result("hsp-promise", False, "oracle image size is not the index")
    return _result("hsp-promise", True, f"{len(cases)} instances verified exhaustively")


def check_gi_equivalence(max_n) -> CheckResult:
    rng = random.Random(31)
    corpus = graphs.all_graphs_up_to_iso(min(4, _cap(4, max_n)))
    for graph in corpus:
        if not graphs.brute_force_gi(graph, graph):
            return _result("gi-equivalence", False, "not reflexive")
    for a in corpus:
        for b in corpus:
            if graphs.brute_force_gi(a, b) != graphs.brute_force_gi(b, a):
                return _result("gi-equivalence", False, "not symmetric")
    for graph in corpus:
        relabeled = graph.apply(_random_perm(rng, graph.vertex_count))
        if not graphs.brute_force_gi(graph, relabeled):
            return _result("gi-equivalence", False, "not closed under relabeling")
    return _result("gi-equivalence", True, "reflexive, symmetric, relabel-closed")


# -- product catalog -------------------------------------------------------------


def check_catalog_closed_forms(max_n) -> CheckResult:
    rng = random.Random(37)
    pairs = [(m, n) for m in (4, 6, 8, 10) for n in (4, 6, 8, 10)]
    for m, n in pairs:
        if m > _cap(10, max_n) or n > _cap(10, max_n):
            continue
        for k_m in dihedral.two_dim_k_range(m):
            for k_n in dihedral.two_dim_k_range(n):
                for entry in products.product_catalog(m, n, k_m, k_n):
                    for _ in range(8):
                        pair = products.random_matching_pair(entry, rng)
                        lhs = products.catalog_character(entry, pair)
                        if lhs != entry.closed_form(pair):
                            return _result("catalog-closed-forms", False, f"{m},{n} entry {entry.index}")
                        factor = entry.m_slot.irrep.character(pair[0]) * entry.n_slot.irrep.character(pair[1])
                        if lhs != factor:
                            return _result("catalog-closed-forms", False, f"factor product {entry.index}")
    return _result("catalog-closed-forms", True, "even factor pairs <= 10, all frequencies")


def check_zero_character_set(max_n) -> CheckResult:
    expected = {7, 8, 15, 16, 23, 24, 31, 32, 39, 40} | set(range(47, 65))
    for m, n in ((6, 6), (6, 8)):
        if m > _cap(8, max_n) or n > _cap(8, max_n):
            continue
        if products.zero_character_set(m, n) != expected:
            return _result("zero-character-set", False, f"({m},{n})")
    return _result("zero-character-set", True, "matches the 28-index listing")


def check_product_irreducibility(max_n) -> CheckResult:
    m = n = min(6, _cap(6, max_n))
    view = repops.product_group_view(
        repops.dihedral_group_view(m), repops.dihedral_group_view(n)
    )
    for label, dim, chi in products.complete_product_dual(m, n):
        if repops.inner_product(chi, chi) != 1:
            return _result("product-irreducibility", False, label)
        if cyclotomic.cyc(chi.values[view.identity]) != dim:
            return _result("product-irreducibility", False, f"dimension of {label}")
    return _result("product-irreducibility", True, f"all tensor irreps of D_{m} x D_{n}")


def check_product_burnside_and_orthogonality(max_n) -> CheckResult:
    for m, n in ((4, 6), (6, 6), (6, 8)):
        if m > _cap(8, max_n) or n > _cap(8, max_n):
            continue
        dual = products.complete_product_dual(m, n)
        if sum(dim**2 for _, dim, _ in dual) != 4 * m * n:
            return _result("product-dual-orthogonality", False, f"Burnside ({m},{n})")
        if m == n == 6:
            view = dual[0][2].group
            classes = view.conjugacy_classes()
            for i, (_, _, chi_a) in enumerate(dual):
                for j in range(i, len(dual)):
                    chi_b = dual[j][2]
                    total = cyclotomic.cyc(0)
                    for members in classes:
                        rep = members[0]
                        term = cyclotomic.cyc(chi_a.values[rep]) * cyclotomic.cyc(
                            chi_b.values[rep]
                        ).conjugate()
                        total = total + term * len(members)
                    expected = view.order if i == j else 0
                    if total != expected:
                        return _result(
                            "product-dual-orthogonality", False, f"rows {i},{j} of ({m},{n})"
                        )
    return _result("product-dual-orthogonality", True, "Burnside + weighted row orthogonality")


def check_product_sampling_report(max_n) -> CheckResult:
    for m, n in ((3, 4), (4, 4), (4, 6), (6, 6)):
        if m + n > _cap(12, max_n if max_n is None else max(max_n, 7)):
            continue
        report = products.product_sampling_failure_report(m, n)
        trivial_rows = [r for r in report.rows if r.probability != 0]
        if len(trivial_rows) != 1 or trivial_rows[0].index != 1:
            return _result("product-sampling-report", False, f"support ({m},{n})")
        expected = Fraction(4 * m * n, factorial(m + n))
        if trivial_rows[0].probability != expected or report.total != expected:
            return _result("product-sampling-report", False, f"value ({m},{n})")
        if report.normalized:
            return _result("product-sampling-report", False, "should be flagged unnormalized")
    return _result("product-sampling-report", True, "only the trivial label survives")


ALL_CHECKS: tuple[tuple[str, Callable], ...] = (
    ("compose-associativity", check_compose_associativity),
    ("cycle-type-conjugation", check_cycle_type_conjugation),
    ("vanishing-root-sums", check_vanishing_root_sums),
    ("cyclotomic-float-agreement", check_cyclotomic_float_agreement),
    ("partition-count-recurrence", check_partition_counts),
    ("burnside-dimension-identity", check_burnside_identity),
    ("mn-dimension-column", check_mn_dimension_column),
    ("table-row-orthogonality", check_table_orthogonality),
    ("yor-traces-match-mn", check_yor_traces),
    ("mn-class-function", check_mn_class_function),
    ("dihedral-embedding", check_dihedral_embedding),
    ("dihedral-irrep-relations", check_dihedral_irrep_relations),
    ("dihedral-irrep-count", check_dihedral_irrep_counts),
    ("dihedral-class-functions", check_dihedral_class_functions),
    ("dihedral-subgroup-catalog", check_subgroup_catalog),
    ("frobenius-symmetric", check_frobenius_symmetric),
    ("frobenius-dihedral", check_frobenius_dihedral),
    ("induced-identity-is-index", check_induced_identity_value),
    ("induced-dimension-count", check_induced_dimension_count),
    ("tensor-norm-product", check_tensor_norm),
    ("statevector-matches-formula", check_statevector_matches_formula),
    ("cycle-auto-zeros", check_cycle_auto_zeros),
    ("ambient-normalization", check_ambient_normalization),
    ("gi-gap-trend", check_gi_gap_trend),
    ("coset-independence", check_coset_independence),
    ("strong-sampling-entries", check_strong_sampling),
    ("cycle-graph-aut", check_cycle_graph_aut),
    ("union-aut-structure", check_union_aut_structure),
    ("reduction-agrees-with-aut", check_reduction_agrees_with_aut),
    ("hsp-promise", check_hsp_promise),
    ("gi-equivalence", check_gi_equivalence),
    ("catalog-closed-forms", check_catalog_closed_forms),
    ("zero-character-set", check_zero_character_set),
    ("product-irreducibility", check_product_irreducibility),
    ("product-dual-orthogonality", check_product_burnside_and_orthogonality),
    ("product-sampling-report", check_product_sampling_report),
)


def run_all(max_n: int | None = None) -> list[CheckResult]:
    results = []
    for name, check in ALL_CHECKS:
        try:
            results.append(check(max_n))
        except Exception as exc:  # a crash is a failed invariant, not a crash of the suite
            results.append(_result(name, False, f"{type(exc).__name__}: {exc}"))
    return results
