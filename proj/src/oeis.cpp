#include "hypersum/oeis.hpp"

#include "hypersum/eval.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hypersum::oeis {

namespace {

bool is_integer_token(std::string_view tok) {
    if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) {
        tok.remove_prefix(1);
    }
    return !tok.empty() &&
           std::all_of(tok.begin(), tok.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string env_or(const char* name, const char* fallback) {
    const char* v = std::getenv(name);
    return v != nullptr && *v != '\0' ? v : fallback;
}

}  // namespace

std::optional<Integer> BFile::value_at(const Integer& index) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const BFileEntry& e, const Integer& i) {
                                   return e.index < i;
                               });
    if (it == entries.end() || !(it->index == index)) {
        return std::nullopt;
    }
    return it->value;
}

bool valid_sequence_id(std::string_view id) {
    if (id.size() < 7 || id.size() > 8 || id.front() != 'A') {
        return false;
    }
    return std::all_of(id.begin() + 1, id.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

BFile parse_bfile(std::string_view text, std::string_view sequence_id) {
    BFile out;
    out.sequence_id = std::string(sequence_id);

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) {
            continue;  // blank
        }
        if (line[first] == '#') {
            continue;  // comment
        }

        std::istringstream fields{std::string(line)};
        std::string index_tok, value_tok, extra;
        fields >> index_tok >> value_tok;
        if (value_tok.empty() || (fields >> extra)) {
            throw ParseError(lineno, "expected '<index> <value>', got '" +
                                         std::string(line) + "'");
        }
        if (!is_integer_token(index_tok) || !is_integer_token(value_tok)) {
            throw ParseError(lineno, "malformed integer in '" + std::string(line) + "'");
        }
        BFileEntry entry{Integer(index_tok), Integer(value_tok)};
        if (!out.entries.empty() && !(out.entries.back().index < entry.index)) {
            throw ParseError(lineno, "index " + entry.index.str() +
                                         " does not increase past " +
                                         out.entries.back().index.str());
        }
        out.entries.push_back(std::move(entry));
    }
    return out;
}

std::string render_bfile(const BFile& b) {
    std::string out;
    for (const BFileEntry& e : b.entries) {
        out += e.index.str();
        out += ' ';
        out += e.value.str();
        out += '\n';
    }
    return out;
}

namespace {

std::string bfile_name(const std::string& sequence_id) {
    return "b" + sequence_id.substr(1) + ".txt";
}

BFile fetch_fixture(const std::string& sequence_id, const std::string& dir) {
    std::string path = dir + "/" + bfile_name(sequence_id);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw NotFoundError("no fixture b-file at " + path);
    }
    std::ostringstream body;
    body << in.rdbuf();
    return parse_bfile(body.str(), sequence_id);
}

BFile fetch_remote(const std::string& sequence_id, const std::string& base_url) {
    httplib::Client client(base_url);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);

    const std::string path = "/" + sequence_id + "/" + bfile_name(sequence_id);
    auto transient = [](const httplib::Result& res) {
        return !res || res->status == 502 || res->status == 503 || res->status == 504;
    };

    httplib::Result res = client.Get(path);
    if (transient(res)) {
        res = client.Get(path);  // one retry
    }
    if (!res) {
        throw NetworkError("GET " + base_url + path + " failed: " +
                           httplib::to_string(res.error()));
    }
    if (res->status == 404) {
        throw NotFoundError("no b-file for " + sequence_id + " at " + base_url);
    }
    if (res->status != 200) {
        throw NetworkError("GET " + base_url + path + " returned status " +
                           std::to_string(res->status));
    }
    return parse_bfile(res->body, sequence_id);
}

}  // namespace

BFile fetch_bfile(const std::string& sequence_id, FetchSource source,
                  const FetchOptions& opts) {
    if (!valid_sequence_id(sequence_id)) {
        throw std::invalid_argument("not an OEIS A-number: '" + sequence_id + "'");
    }
    if (source == FetchSource::fixture_dir) {
        std::string dir = opts.fixture_dir.value_or(env_or("OEIS_FIXTURE_DIR", "data/oeis"));
        return fetch_fixture(sequence_id, dir);
    }
    std::string base = opts.base_url.value_or(env_or("OEIS_BASE_URL", "https://oeis.org"));
    return fetch_remote(sequence_id, base);
}

const std::vector<SequenceBinding>& builtin_bindings() {
    static const std::vector<SequenceBinding> bindings = {
        {"A000292", Natural(1), Natural(2), Integer(1)},
        {"A000332", Natural(1), Natural(3), Integer(4)},
        {"A000537", Natural(3), Natural(1), Integer(1)},
    };
    return bindings;
}

ComparisonReport compare_sequence(const SequenceBinding& b, const BFile& file,
                                  const Natural& count) {
    ComparisonReport report;
    report.binding = b;
    const std::uint32_t terms = count.to_index();

    EvalSession session;
    for (std::uint32_t n = 1; n <= terms; ++n) {
        Integer index = b.offset + Integer(Natural(n)) - Integer(1);
        std::optional<Integer> oeis_value = file.value_at(index);
        if (!oeis_value) {
            throw InsufficientTermsError(b.sequence_id + ": no entry at index " +
                                         index.str() + " (term n=" + std::to_string(n) +
                                         " of " + count.str() + ")");
        }
        Natural computed = session.closed(HypersumQuery(Natural(n), b.m, b.k));
        TermComparison t;
        t.n = n;
        t.oeis_index = index;
        t.oeis_value = oeis_value->str();
        t.computed = computed.str();
        t.match = *oeis_value == Integer(computed);
        report.mismatches += t.match ? 0 : 1;
        report.terms.push_back(std::move(t));
    }
    return report;
}

}  // namespace hypersum::oeis
