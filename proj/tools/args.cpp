#include "args.hpp"

#include <array>

#include "dhero/constructions.hpp"
#include "dhero/errors.hpp"

namespace dhero::cli {

namespace {

MultipartiteStructure singletons(int n) {
    MultipartiteStructure parts;
    for (int v = 0; v < n; ++v) parts.parts.push_back({v});
    return parts;
}

int size_suffix(const std::string& spec, const std::string& prefix) {
    const std::string digits = spec.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4)
        throw RangeError("bad size in '" + spec + "'");
    return std::stoi(digits);
}

}  // namespace

DigraphFile digraph_arg(const std::string& spec) {
    auto tournament = [](Digraph g) {
        const int n = g.size();
        return DigraphFile{std::move(g), singletons(n)};
    };
    if (spec == "k1") return tournament(k1());
    if (spec == "c3") return tournament(c3());
    if (spec == "delta122") return tournament(delta(tt(2), tt(2)));
    if (spec == "r5") {
        constexpr std::array<int, 2> offsets{1, 2};
        return tournament(circulant(5, offsets));
    }
    if (spec.rfind("tt:", 0) == 0) return tournament(tt(size_suffix(spec, "tt:")));
    if (spec.rfind("edgeless:", 0) == 0) {
        const int n = size_suffix(spec, "edgeless:");
        MultipartiteStructure one;
        one.parts.emplace_back();
        for (int v = 0; v < n; ++v) one.parts.back().push_back(v);
        return {edgeless(n), n > 0 ? std::optional(one) : std::nullopt};
    }
    return read_dg_file(spec);
}

}  // namespace dhero::cli
