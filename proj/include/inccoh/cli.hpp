#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace inccoh::cli {

enum class Format
{
    json,
    csv,
    text
};

struct QuerySpec
{
    std::string command; // cohomology | character | table | regularity | verify
    int n = 3;
    std::int64_t p = 2;
    Format format = Format::json;

    std::optional<std::int64_t> a, b, d, e;
    std::optional<int> i;

    std::int64_t a_min = 0, a_max = 0, b_min = 0, b_max = 0; // table
    std::optional<std::int64_t> d_max, e_max;                // verify
    bool scan = false;                                        // regularity: also run the oracle
};

/// Throws InvalidArgument for a malformed query (composite p, n < 3, missing parameters).
void validate(const QuerySpec& q);

/// Format name -> enum; throws InvalidArgument.
Format parse_format(const std::string& s);

/// Runs one validated query. Returns the process exit code.
int cmd_cohomology(const QuerySpec& q, std::ostream& out);
int cmd_character(const QuerySpec& q, std::ostream& out, std::ostream& err);
int cmd_table(const QuerySpec& q, std::ostream& out);
int cmd_regularity(const QuerySpec& q, std::ostream& out);
int cmd_verify(const QuerySpec& q, std::ostream& out);

/// validate + dispatch; library errors become exit code 2 with a message on err.
int run(const QuerySpec& q, std::ostream& out, std::ostream& err);

} // namespace inccoh::cli
