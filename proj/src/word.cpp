#include "qstirling/word.hpp"

#include "qstirling/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace qstir {

std::string ExtendedValue::to_string() const {
    switch (kind_) {
    case Kind::neg_infinity: return "-inf";
    case Kind::pos_infinity: return "+inf";
    case Kind::finite: break;
    }
    return std::to_string(value_);
}

Word parse_word(std::string_view text) {
    Word w;
    if (text.empty()) return w;
    if (text.find('.') == std::string_view::npos) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
                throw ParseError(std::string("invalid letter '") + c + "' in word \"" +
                                 std::string(text) + "\"");
            }
            w.values.push_back(c - '0');
        }
        return w;
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t dot = text.find('.', pos);
        const std::string_view token =
            text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        Value v = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || v < 1) {
            throw ParseError("invalid letter \"" + std::string(token) + "\" in word \"" +
                             std::string(text) + "\"");
        }
        w.values.push_back(v);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return w;
}

std::string format_word(const Word& w) {
    const bool compact =
        std::all_of(w.values.begin(), w.values.end(), [](Value v) { return v >= 0 && v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (!compact && i) out += '.';
        out += std::to_string(w.values[i]);
    }
    return out;
}

std::map<Value, std::size_t> word_content(const Word& w) {
    std::map<Value, std::size_t> content;
    for (Value v : w.values) ++content[v];
    return content;
}

bool is_permutation_of(const MultisetSpec& M, const Word& w) {
    if (w.size() != M.K()) return false;
    std::vector<std::size_t> seen(M.n() + 1, 0);
    for (Value v : w.values) {
        if (v < 1 || static_cast<std::size_t>(v) > M.n()) return false;
        ++seen[static_cast<std::size_t>(v)];
    }
    for (std::size_t v = 1; v <= M.n(); ++v) {
        if (seen[v] != M.multiplicities()[v - 1]) return false;
    }
    return true;
}

void validate_word(const MultisetSpec& M, const Word& w) {
    if (!is_permutation_of(M, w)) {
        throw ValidationError("word \"" + format_word(w) + "\" is not a permutation of " +
                              M.to_set_notation());
    }
}

void for_each_word(const MultisetSpec& M, const std::function<void(const Word&)>& visit,
                   std::size_t size_cap) {
    require_within_cap(M, size_cap, "word enumeration");
    Word w;
    w.values.reserve(M.K());
    for (std::size_t v = 1; v <= M.n(); ++v) {
        w.values.insert(w.values.end(), M.multiplicities()[v - 1], static_cast<Value>(v));
    }
    do {
        visit(w);
    } while (std::next_permutation(w.values.begin(), w.values.end()));
}

std::vector<Word> enumerate_words(const MultisetSpec& M, std::size_t size_cap) {
    std::vector<Word> out;
    for_each_word(M, [&](const Word& w) { out.push_back(w); }, size_cap);
    return out;
}

bool is_quasi_stirling(const Word& w) {
    const auto content = word_content(w);
    std::vector<Value> repeated;
    for (const auto& [v, count] : content) {
        if (count >= 2) repeated.push_back(v);
    }
    // Project onto each pair of repeated values; four alternating runs contain abab.
    for (std::size_t a = 0; a < repeated.size(); ++a) {
        for (std::size_t b = a + 1; b < repeated.size(); ++b) {
            const Value x = repeated[a];
            const Value y = repeated[b];
            Value previous = 0;
            int runs = 0;
            for (Value v : w.values) {
                if ((v == x || v == y) && v != previous) {
                    previous = v;
                    if (++runs == 4) return false;
                }
            }
        }
    }
    return true;
}

bool is_stirling(const Word& w) {
    std::map<Value, std::size_t> last_seen;
    for (std::size_t j = 0; j < w.values.size(); ++j) {
        const Value v = w.values[j];
        if (const auto it = last_seen.find(v); it != last_seen.end()) {
            for (std::size_t i = it->second + 1; i < j; ++i) {
                if (w.values[i] <= v) return false;
            }
        }
        last_seen[v] = j;
    }
    return true;
}

std::size_t des(const Word& w) {
    if (w.empty()) throw DomainError("des is undefined for the empty word");
    std::size_t count = 1;
    for (std::size_t i = 0; i + 1 < w.values.size(); ++i) {
        if (w.values[i] > w.values[i + 1]) ++count;
    }
    return count;
}

Ends ends(const Word& w) {
    if (w.empty()) return {ExtendedValue::pos_infinity(), ExtendedValue::neg_infinity()};
    return {ExtendedValue::finite(w.values.front()), ExtendedValue::finite(w.values.back())};
}

namespace {

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

SpecialCounts special_counts(const MultisetSpec& M) {
    SpecialCounts counts;
    const auto& mult = M.multiplicities();
    const std::size_t k = mult.front();
    const bool uniform = std::all_of(mult.begin(), mult.end(), [k](std::size_t x) { return x == k; });
    if (!uniform || k < 2) return counts;
    const auto n = static_cast<unsigned>(M.n());
    counts.top_des = ipow(BigInt((k - 1) * n + 1), n - 1);
    if (k == 2) {
        // n! * C(2n, n) / (n + 1)
        counts.total = factorial(2 * n) / factorial(n) / (n + 1);
    }
    return counts;
}

} // namespace qstir
