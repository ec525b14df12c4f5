#ifndef DISSOC_VERIFIER_HPP
#define DISSOC_VERIFIER_HPP

#include "dissoc/families.hpp"
#include "dissoc/structural.hpp"

#include <string>
#include <vector>

namespace dissoc {

enum class Verdict { MATCH, BOUND_VIOLATION, EXTREMAL_MISMATCH, CONVENTION_SENSITIVE };

const char* verdict_name(Verdict v);

// One row of a theorem sweep: the predicted bound and extremal family codes
// against the observed maximum over all of P(n,k).  For n below the theorem
// hypothesis the expectation comes from the small-case rules instead, and
// the bound carries no candidates.
struct TheoremReport {
    int n = 0;
    int k = 0;
    closed_form::BoundResult bound;
    long long observed_max = 0;
    std::vector<std::string> argmax_codes;
    std::vector<std::string> predicted_codes;
    Verdict verdict = Verdict::MATCH;
};

std::vector<TheoremReport> sweep_theorem(int k, int n_min, int n_max, int jobs = 1,
                                         int cap = kDefaultOracleCap);

// Fixed component orders: among potted graphs whose components of G - C_k
// have exactly the given order multiset, the argmax of m must be the graphs
// whose every component is a family tree attached at its branch vertex
// (P3 components may attach anywhere when k = 0 mod 3, or when a trailing
// singleton component is present).  A trailing order 1 is only admissible
// for k not divisible by 3.
struct StructureReport {
    int k = 0;
    std::vector<int> orders;
    long long observed_max = 0;
    std::vector<std::string> argmax_codes;
    std::vector<std::string> predicted_codes;
    bool match = false;
};

StructureReport verify_structure_theorem(const std::vector<int>& orders, int k,
                                         int cap = kDefaultOracleCap);

// Appendix-table reproduction.  Each cell is either an exact value or a
// strict/non-strict inequality in n, checked against the oracle on concrete
// labeled instances (the smallest shape plus one larger).
enum class CellKind { Exact, Less, AtMost };

struct TableCell {
    std::string label;       // vertex label in the table
    long long expected_v = 0;
    CellKind kind_v = CellKind::Exact;
    long long expected_nv = 0;
    CellKind kind_nv = CellKind::Exact;
    long long observed_v = 0;
    long long observed_nv = 0;
    bool pass = false;
};

struct TableInstance {
    int n = 0;
    std::string shape; // arm list, e.g. "Gw(P3,P4)"
    std::vector<TableCell> cells;
    bool all_pass = false;
};

struct TableReport {
    int table_id = 0; // 1..7
    std::vector<TableInstance> instances;
    bool all_pass = false;
};

std::vector<TableReport> verify_appendix_tables(int max_n = 12, int cap = kDefaultOracleCap);

// Numerical validation of the inequality lemmas over bounded ranges,
// including the exact equality cases.
struct InequalityBudget {
    int t_max = 10;  // partition total for the f/g inequality
    int l_max = 12;
    int m_extra = 15; // m ranges over l+3 .. l+m_extra
    int s_max = 16;
};

struct InequalityReport {
    long long instances_checked = 0;
    std::vector<std::string> counterexamples;      // violated inequality instances
    std::vector<std::string> equality_mismatches;  // equality observed but not predicted, or vice versa
    bool all_pass = false;
};

InequalityReport verify_inequality_lemmas(const InequalityBudget& budget = {});

// |P(k+1,k)| = 1; |P(k+2,k)| = 2 with equal m; |P(k+3,k)| = 4 with argmax
// {path, broom} when k = 0 mod 3 and {path} otherwise.
struct SmallCaseRow {
    int n = 0;
    std::string check;
    bool pass = false;
    std::string detail;
};

struct SmallCaseReport {
    int k = 0;
    std::vector<SmallCaseRow> rows;
    bool all_pass = false;
};

SmallCaseReport verify_small_cases(int k, int cap = kDefaultOracleCap);

// CSV emission (the machine contract; byte-identical across job counts).
std::string theorem_reports_csv(const std::vector<TheoremReport>& reports);
std::string structure_report_csv(const std::vector<StructureReport>& reports);
std::string table_reports_csv(const std::vector<TableReport>& reports);
std::string inequality_report_csv(const InequalityReport& report);
std::string small_case_reports_csv(const std::vector<SmallCaseReport>& reports);

} // namespace dissoc

#endif
