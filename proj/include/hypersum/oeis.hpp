#pragma once

#include "hypersum/exact_arith.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypersum::oeis {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientTermsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BFileEntry {
    Integer index;
    Integer value;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Parsed OEIS b-file: "<index> <value>" lines with strictly increasing
/// indices; '#' comment lines and blank lines skipped; LF or CRLF.
struct BFile {
    std::string sequence_id;
    std::vector<BFileEntry> entries;

    std::optional<Integer> value_at(const Integer& index) const;

    friend bool operator==(const BFile&, const BFile&) = default;
};

/// "A" followed by six or seven digits.
bool valid_sequence_id(std::string_view id);

/// Throws ParseError (with 1-based line number) on any malformed
/// non-comment line or on a non-increasing index.
BFile parse_bfile(std::string_view text, std::string_view sequence_id = "");

/// Inverse of parse_bfile up to comments and blank lines.
std::string render_bfile(const BFile& b);

enum class FetchSource { remote, fixture_dir };

/// Unset fields fall back to $OEIS_BASE_URL / $OEIS_FIXTURE_DIR, then to
/// "https://oeis.org" and "data/oeis".
struct FetchOptions {
    std::optional<std::string> base_url;
    std::optional<std::string> fixture_dir;
};

/// Remote mode issues one GET for <base>/<id>/b<digits>.txt with a single
/// retry on transient failures (connect/read errors, 502/503/504). Fixture
/// mode reads <dir>/b<digits>.txt. Both feed the same parser.
/// Throws NotFoundError, NetworkError, ParseError, or std::invalid_argument
/// for a malformed sequence id (checked before any I/O).
BFile fetch_bfile(const std::string& sequence_id, FetchSource source,
                  const FetchOptions& opts = {});

/// Ties F(., m, k) to an OEIS sequence; offset is the OEIS index of the
/// n=1 term.
struct SequenceBinding {
    std::string sequence_id;
    Natural m;
    Natural k;
    Integer offset;
};

/// The shipped bindings: A000292 = F(n,1,2), A000332 = F(n,1,3) (offset 4,
/// that b-file leads with zeros), A000537 = F(n,3,1).
const std::vector<SequenceBinding>& builtin_bindings();

struct TermComparison {
    std::uint32_t n = 0;
    Integer oeis_index;
    std::string oeis_value;
    std::string computed;
    bool match = true;
};

struct ComparisonReport {
    SequenceBinding binding;
    std::vector<TermComparison> terms;
    std::uint64_t mismatches = 0;
    bool pass() const { return mismatches == 0; }
};

/// Compares f_closed(n, b.m, b.k) against the file for n = 1..count.
/// Throws InsufficientTermsError when the file lacks any required index.
ComparisonReport compare_sequence(const SequenceBinding& b, const BFile& file,
                                  const Natural& count);

}  // namespace hypersum::oeis
