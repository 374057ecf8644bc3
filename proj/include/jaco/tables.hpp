#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jaco/sequence.hpp"

namespace jaco {

struct TableCell {
    std::uint64_t row = 0;       // n
    std::uint64_t col = 0;       // clique size l
    std::uint64_t paper = 0;     // value as published
    std::uint64_t computed = 0;  // value recomputed here
    bool match = false;
};

struct TableDiff {
    int table_id = 0;
    std::string params;  // e.g. "k=5" or "variant=paper-figure"
    std::vector<TableCell> cells;  // row-major
    std::uint64_t match_count = 0;
    std::uint64_t mismatch_count = 0;

    // Header "table,row,col,paper,computed,match"; match is 1/0.
    std::string to_csv() const;
};

struct TableParams {
    std::uint64_t k = 5;                           // table 4 modulus
    SetVariant variant = SetVariant::PaperFigure;  // table 5 term rule
};

// Recomputes every cell of the identified published table from scratch and
// diffs it against the embedded transcription. Table 1: clique counts of
// K_1..K_10 by subset-testing explicitly built complete graphs. Table 2:
// per-vertex clique degrees of K_1..K_10. Table 3: censuses of J_1..J_12
// over the Fibonacci sequence. Table 4: censuses of J_1..J_18 over i mod k.
// Table 5: censuses of J_1..J_13 over the set sequence (base 3).
// Throws std::invalid_argument for an unknown id.
TableDiff regenerate_table(int table_id, const TableParams& params = {});

// The published values, transcribed verbatim - including the cells that do
// not survive recomputation.
const std::array<std::array<std::uint64_t, 10>, 10>& reference_table1();
const std::array<std::array<std::uint64_t, 10>, 10>& reference_table2();
const std::array<std::array<std::uint64_t, 7>, 12>& reference_table3();
const std::array<std::array<std::uint64_t, 3>, 18>& reference_table4();
const std::array<std::array<std::uint64_t, 5>, 13>& reference_table5();

}  // namespace jaco
