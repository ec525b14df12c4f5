#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissoc/json_io.hpp"
#include "dissoc/verifier.hpp"

using namespace dissoc;

TEST_CASE("theorem sweep matches on known rows") {
    auto reports = sweep_theorem(6, 10, 11);
    REQUIRE(reports.size() == 2);

    CHECK(reports[0].n == 10);
    CHECK(reports[0].verdict == Verdict::MATCH);
    CHECK(reports[0].observed_max == 4);
    REQUIRE(reports[0].argmax_codes.size() == 1); // the single G2 member
    CHECK(reports[0].argmax_codes == reports[0].predicted_codes);

    CHECK(reports[1].n == 11);
    CHECK(reports[1].verdict == Verdict::MATCH);
    CHECK(reports[1].observed_max == 3);
    CHECK(reports[1].argmax_codes.size() == 7); // G3..G5 bases plus two members each of G6, G7
}

TEST_CASE("theorem sweep k=4 n=9 finds the four extremal graphs") {
    auto reports = sweep_theorem(4, 9, 9);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].verdict == Verdict::MATCH);
    CHECK(reports[0].observed_max == 9);
    CHECK(reports[0].argmax_codes.size() == 4);
}

TEST_CASE("tie rows predict both families") {
    auto reports = sweep_theorem(5, 9, 9); // x1 = x2 = 7
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].verdict == Verdict::MATCH);
    CHECK(reports[0].observed_max == 7);
    CHECK(reports[0].bound.candidates.size() == 2);
    CHECK(reports[0].argmax_codes.size() == 3); // G2 base + two G9 members
}

TEST_CASE("small-case rows in a sweep") {
    auto reports = sweep_theorem(6, 7, 9);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) CHECK(r.verdict == Verdict::MATCH);
    CHECK(reports[0].argmax_codes.size() == 1);
    CHECK(reports[1].argmax_codes.size() == 2);
    CHECK(reports[2].argmax_codes.size() == 2); // path and broom at k = 0 mod 3
}

TEST_CASE("verify_small_cases") {
    for (int k = 3; k <= 7; ++k) {
        SmallCaseReport rep = verify_small_cases(k);
        CHECK(rep.all_pass);
        REQUIRE(rep.rows.size() == 3);
    }
}

TEST_CASE("structure theorem verification") {
    // k = 6, single component of order 3: both P3 attachments are extremal.
    StructureReport r = verify_structure_theorem({3}, 6);
    CHECK(r.match);
    CHECK(r.argmax_codes.size() == 2);

    // k = 5: only the end-vertex attachment.
    r = verify_structure_theorem({3}, 5);
    CHECK(r.match);
    CHECK(r.argmax_codes.size() == 1);

    // k = 5, order 4: exactly the T2 member at w.
    r = verify_structure_theorem({4}, 5);
    CHECK(r.match);
    CHECK(r.argmax_codes.size() == 1);

    // Two components.
    r = verify_structure_theorem({3, 4}, 5);
    CHECK(r.match);

    // Corollary: trailing singleton, k not divisible by 3.
    r = verify_structure_theorem({3, 1}, 5);
    CHECK(r.match);
    CHECK(r.argmax_codes.size() == 2); // the P3 attaches anywhere in the corollary

    CHECK_THROWS_AS(verify_structure_theorem({3, 1}, 6), PreconditionViolated);
    CHECK_THROWS_AS(verify_structure_theorem({2}, 5), PreconditionViolated);
    CHECK_THROWS_AS(verify_structure_theorem({1}, 5), PreconditionViolated);
}

TEST_CASE("appendix tables reproduce") {
    auto reports = verify_appendix_tables(12);
    REQUIRE(reports.size() == 7);
    for (const auto& rep : reports) {
        CHECK(rep.all_pass);
        CHECK(rep.instances.size() == 2);
        for (const auto& inst : rep.instances) CHECK(inst.all_pass);
    }

    // Spot-check a few cells of table 1 at n = 6.
    const auto& t1 = reports[0].instances[0];
    CHECK(t1.n == 6);
    for (const auto& cell : t1.cells) {
        if (cell.label == "w") {
            CHECK(cell.observed_v == 3);
            CHECK(cell.observed_nv == 1);
        }
        if (cell.label == "u1") {
            CHECK(cell.observed_v == 1);
            CHECK(cell.observed_nv == 2);
        }
    }
}

TEST_CASE("tables 1 and 2 agree on structurally shared columns") {
    // At the same order, the branch vertex and the P4-arm cells away from w
    // coincide between the all-P4 shape and the mixed shape; only the cells
    // influenced by the claw arm differ (and those are inequality cells).
    auto reports = verify_appendix_tables(12);
    auto find_instance = [&](int table, int n) -> const TableInstance& {
        for (const auto& inst : reports[static_cast<std::size_t>(table - 1)].instances)
            if (inst.n == n) return inst;
        throw std::runtime_error("instance not found");
    };
    const TableInstance& t1 = find_instance(1, 9);
    const TableInstance& t2 = find_instance(2, 9);
    auto observed = [](const TableInstance& inst, const std::string& label) {
        for (const auto& c : inst.cells)
            if (c.label == label) return std::pair{c.observed_v, c.observed_nv};
        throw std::runtime_error("label not found");
    };
    CHECK(observed(t1, "w") == observed(t2, "w"));
    CHECK(observed(t1, "u1").first == observed(t2, "z1").first);
    CHECK(observed(t1, "u4") == observed(t2, "z4"));
    CHECK(observed(t1, "u5") == observed(t2, "z5"));
}

TEST_CASE("sweep maxima agree with the plain oracle") {
    for (int k : {4, 5}) {
        auto reports = sweep_theorem(k, k + 1, k + 6);
        for (const auto& rep : reports) {
            long long oracle_max = 0;
            for (const auto& p : enumerate_potted(rep.n, k))
                oracle_max = std::max(oracle_max, solve(flatten_potted(p)).count);
            CHECK(rep.observed_max == oracle_max);
        }
    }
}

TEST_CASE("inequality lemmas hold on a reduced budget") {
    InequalityBudget small;
    small.t_max = 7;
    small.l_max = 9;
    small.m_extra = 10;
    small.s_max = 13;
    InequalityReport rep = verify_inequality_lemmas(small);
    CHECK(rep.all_pass);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.equality_mismatches.empty());
    CHECK(rep.instances_checked > 100);
}

TEST_CASE("csv emission is stable") {
    auto reports = sweep_theorem(6, 10, 10);
    std::string csv = theorem_reports_csv(reports);
    CHECK(csv.find("n,k,bound,observed,verdict,argmax_codes\n") == 0);
    CHECK(csv.find("10,6,4,4,MATCH,") != std::string::npos);
}

TEST_CASE("json round trips") {
    Graph g = make_cycle(5);
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());

    PottedGraph p;
    p.cycle_len = 6;
    p.attach.children.push_back(RootedTree::chain(1));
    p.attach.children[0].children.push_back(RootedTree::leaf());
    PottedGraph pback = potted_from_json(potted_to_json(p));
    CHECK(canonical_code(pback) == canonical_code(p));

    // The documented example encodes C6 with u -> w and w -> {leaf, path-of-2}.
    PottedGraph doc = potted_from_json(nlohmann::json::parse(R"({"k":6,"tree":[[[],[[]]]]})"));
    CHECK(doc.order() == 10);

    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":"x","edges":[]})")), FormatError);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":3})")), FormatError);
    CHECK_THROWS_AS(potted_from_json(nlohmann::json::parse(R"({"k":6,"tree":[]})")), FormatError);

    FamilyDescriptor d{FamilyId::G2, 6, 0, 0, 10, 0};
    FamilyDescriptor dback = descriptor_from_json(descriptor_to_json(d), 10);
    CHECK(dback == d);
}
