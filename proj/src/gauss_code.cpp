#include "lacet/gauss_code.hpp"

#include "lacet/errors.hpp"

#include <cctype>
#include <map>

namespace lacet {

GaussCode GaussCode::from_sequence(std::vector<int> seq, std::vector<std::string> names) {
    if (seq.empty()) fail(Errc::empty_input, "empty Gauss code");
    if (seq.size() % 2 != 0)
        fail(Errc::odd_length, "Gauss code has odd length " + std::to_string(seq.size()));
    const int n = static_cast<int>(seq.size() / 2);

    std::vector<int> count(n + 1, 0);
    for (int v : seq) {
        if (v < 1 || v > n)
            fail(Errc::label_out_of_range,
                 "label " + std::to_string(v) + " outside 1.." + std::to_string(n));
        ++count[v];
    }
    for (int x = 1; x <= n; ++x)
        if (count[x] != 2)
            fail(Errc::bad_multiplicity, "label " + std::to_string(x) + " occurs " +
                                             std::to_string(count[x]) + " times, expected 2");

    GaussCode code;
    code.n_ = n;
    code.seq_ = std::move(seq);
    if (names.empty()) {
        names.reserve(n);
        for (int x = 1; x <= n; ++x) names.push_back(std::to_string(x));
    } else if (static_cast<int>(names.size()) != n) {
        fail(Errc::dimension_mismatch, "name table size != n");
    }
    code.names_ = std::move(names);

    code.occ_.assign(n, {-1, -1});
    for (int i = 0; i < 2 * n; ++i) {
        auto& [a, b] = code.occ_[code.seq_[i] - 1];
        (a < 0 ? a : b) = i;
    }
    return code;
}

const std::string& GaussCode::name_of(int label) const {
    if (label < 1 || label > n_)
        fail(Errc::label_out_of_range, "label " + std::to_string(label) + " outside 1..n");
    return names_[label - 1];
}

std::pair<int, int> GaussCode::occurrences(int x) const {
    if (x < 1 || x > n_)
        fail(Errc::label_out_of_range, "label " + std::to_string(x) + " outside 1..n");
    return occ_[x - 1];
}

namespace {

std::vector<std::string> tokenize(std::string_view text, bool compact) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else if (compact) {
            tokens.emplace_back(1, ch);
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

// canonical decimal without sign or leading zeros
bool as_positive_int(const std::string& tok, int& out) {
    if (tok.empty() || tok.size() > 9) return false;
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    if (tok.size() > 1 && tok[0] == '0') return false;
    out = std::stoi(tok);
    return out >= 1;
}

} // namespace

GaussCode parse_gauss_code(std::string_view text, bool compact_digits) {
    const std::vector<std::string> tokens = tokenize(text, compact_digits);
    if (tokens.empty()) fail(Errc::empty_input, "empty Gauss code");

    std::map<std::string, int> count;
    std::vector<std::string> order; // first-occurrence order
    for (const auto& t : tokens) {
        if (++count[t] == 1) order.push_back(t);
    }
    for (const auto& t : order)
        if (count[t] != 2)
            fail(Errc::bad_multiplicity,
                 "token '" + t + "' occurs " + std::to_string(count[t]) + " times, expected 2");
    if (tokens.size() % 2 != 0)
        fail(Errc::odd_length, "Gauss code has odd length " + std::to_string(tokens.size()));
    const int n = static_cast<int>(tokens.size() / 2);

    // Numeric codes over exactly {1..n} keep their labels; anything else is
    // normalized by first occurrence.
    std::map<std::string, int> label;
    bool numeric_identity = static_cast<int>(order.size()) == n;
    for (const auto& t : order) {
        int v;
        if (!as_positive_int(t, v) || v > n) {
            numeric_identity = false;
            break;
        }
        label[t] = v;
    }
    if (!numeric_identity) {
        label.clear();
        int next = 1;
        for (const auto& t : order) label[t] = next++;
    }

    std::vector<int> seq;
    seq.reserve(tokens.size());
    for (const auto& t : tokens) seq.push_back(label[t]);
    std::vector<std::string> names(n);
    for (const auto& [tok, lab] : label) names[lab - 1] = tok;
    return GaussCode::from_sequence(std::move(seq), std::move(names));
}

EdgeSet interlace(const GaussCode& code, int x) {
    const auto [first, second] = code.occurrences(x);
    const int n = code.n();
    std::vector<int> seen(n + 1, 0);
    for (int i = first + 1; i < second; ++i) ++seen[code.sequence()[i]];
    EdgeSet out(n);
    for (int y = 1; y <= n; ++y)
        if (seen[y] == 1) out.set(y - 1);
    return out;
}

EdgeSet interlace_squared(const GaussCode& code, int x) {
    EdgeSet acc(code.n());
    for (auto bit : interlace(code, x).set_bits()) acc ^= interlace(code, static_cast<int>(bit) + 1);
    return acc;
}

gf2::BitMatrix interlace_matrix(const GaussCode& code) {
    gf2::BitMatrix m;
    for (int x = 1; x <= code.n(); ++x) m.append_row(interlace(code, x));
    return m;
}

ParityPartition parity_partition(const GaussCode& code) {
    const int n = code.n();
    ParityPartition p{EdgeSet(n), EdgeSet(n)};
    for (int x = 1; x <= n; ++x) {
        if (interlace(code, x).odd())
            p.odd.set(x - 1);
        else
            p.even.set(x - 1);
    }
    return p;
}

GaussCode canonicalize(const GaussCode& code) {
    const int n = code.n();
    std::vector<int> relabel(n + 1, 0);
    std::vector<std::string> names(n);
    int next = 1;
    std::vector<int> seq;
    seq.reserve(2 * n);
    for (int v : code.sequence()) {
        if (relabel[v] == 0) {
            relabel[v] = next++;
            names[relabel[v] - 1] = code.names()[v - 1];
        }
        seq.push_back(relabel[v]);
    }
    return GaussCode::from_sequence(std::move(seq), std::move(names));
}

GaussCode rotated(const GaussCode& code, int k) {
    const int len = 2 * code.n();
    std::vector<int> seq(len);
    for (int i = 0; i < len; ++i) seq[i] = code.sequence()[(i + k % len + len) % len];
    return GaussCode::from_sequence(std::move(seq), code.names());
}

GaussCode reversed(const GaussCode& code) {
    std::vector<int> seq(code.sequence().rbegin(), code.sequence().rend());
    return GaussCode::from_sequence(std::move(seq), code.names());
}

std::vector<int> labels_of(const EdgeSet& s) {
    std::vector<int> out;
    for (auto b : s.set_bits()) out.push_back(static_cast<int>(b) + 1);
    return out;
}

std::string to_label_set_string(const EdgeSet& s) {
    std::string out = "{";
    bool first = true;
    for (int lab : labels_of(s)) {
        if (!first) out += ',';
        out += std::to_string(lab);
        first = false;
    }
    out += '}';
    return out;
}

} // namespace lacet
