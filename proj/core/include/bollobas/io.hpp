#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bollobas/certify.hpp"
#include "bollobas/search.hpp"
#include "bollobas/sets.hpp"

namespace bollobas::io {

// Input that is not a well-formed system line. `line` is 1-based and 0 when
// the error is not tied to a specific line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line_number = 0)
        : std::runtime_error(message), line(line_number) {}
    std::size_t line;
};

// JSON-lines system format, 1-based element labels:
//   {"n": 3, "pairs": [{"A": [1,2], "B": [3]}, ...]}
//   {"n": 3, "d": 3, "members": [{"blocks": [[1],[2],[3]]}, ...]}
std::string to_json_line(const SetPairSystem& system);
std::string to_json_line(const DPartitionSystem& system);

enum class SystemKind { SetPairs, DPartitions };

struct AnySystem {
    SystemKind kind = SystemKind::SetPairs;
    SetPairSystem pairs;
    DPartitionSystem partitions;
};

AnySystem parse_system_line(const std::string& line);
SetPairSystem parse_set_pair_system(const std::string& line);
DPartitionSystem parse_dpartition_system(const std::string& line);

// Whole stream of JSON lines; blank lines are skipped and ParseError carries
// the 1-based line number.
std::vector<AnySystem> read_systems(std::istream& in);

// Certificate as a single JSON object (pattern as an m x m 0/1 matrix, rank,
// bound, verdict, field modulus, seed, offending cell as 1-based [i, j]).
std::string certificate_to_json(const Certificate& cert);

// Search report as a single JSON object; the witness uses the system format
// above and the optimum serializes as "p/q".
std::string report_to_json(const SearchReport& report);

}  // namespace bollobas::io
