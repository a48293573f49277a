#include "qstirling/multiset.hpp"

#include "qstirling/errors.hpp"

#include <charconv>
#include <numeric>

namespace qstir {

MultisetSpec::MultisetSpec(std::vector<std::size_t> multiplicities)
    : mult_(std::move(multiplicities)) {
    if (mult_.empty()) {
        throw ValidationError("multiset must contain at least one value");
    }
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0) {
            throw ValidationError("multiplicity of value " + std::to_string(i + 1) +
                                  " must be >= 1");
        }
    }
    total_ = std::accumulate(mult_.begin(), mult_.end(), std::size_t{0});
}

std::size_t MultisetSpec::multiplicity(Value v) const noexcept {
    if (v < 1 || static_cast<std::size_t>(v) > mult_.size()) return 0;
    return mult_[static_cast<std::size_t>(v) - 1];
}

MultisetSpec MultisetSpec::uniform(std::size_t n, std::size_t k) {
    return MultisetSpec(std::vector<std::size_t>(n, k));
}

std::string MultisetSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(mult_[i]);
    }
    return out;
}

std::string MultisetSpec::to_set_notation() const {
    std::string out = "{";
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(i + 1);
        if (mult_[i] > 1) out += "^" + std::to_string(mult_[i]);
    }
    return out + "}";
}

MultisetSpec parse_multiset(std::string_view text) {
    std::vector<std::size_t> mult;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) {
            throw ParseError("empty multiplicity token in \"" + std::string(text) + "\"");
        }
        long long value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size()) {
            throw ParseError("not an integer multiplicity: \"" + std::string(token) + "\"");
        }
        if (value < 1) {
            throw ParseError("multiplicity must be >= 1, got \"" + std::string(token) + "\"");
        }
        mult.push_back(static_cast<std::size_t>(value));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return MultisetSpec(std::move(mult));
}

namespace {

void compositions(std::size_t remaining, std::vector<std::size_t>& prefix,
                  std::vector<MultisetSpec>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        compositions(remaining - part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultisetSpec> multisets_up_to(std::size_t max_size) {
    std::vector<MultisetSpec> out;
    std::vector<std::size_t> prefix;
    for (std::size_t K = 1; K <= max_size; ++K) {
        compositions(K, prefix, out);
    }
    return out;
}

void require_within_cap(const MultisetSpec& M, std::size_t cap, const char* what_for) {
    if (M.K() > cap) throw SizeLimitError(what_for, M.K(), cap);
}

} // namespace qstir
