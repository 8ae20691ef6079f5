#include "splitbound/braid.hpp"

#include <cctype>
#include <sstream>

namespace splitbound {

BraidWord parse_braid(const std::string& text) {
    BraidWord b;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip();
    if (text.compare(i, 3, "BR[") != 0) throw ParseError("expected BR[k; ...]");
    i += 3;
    skip();
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == s) throw ParseError("expected strand count");
    b.strands = std::stoi(text.substr(s, i - s));
    if (b.strands < 1) throw ParseError("strand count must be positive");
    skip();
    if (i >= text.size() || text[i] != ';') throw ParseError("expected ';' after strand count");
    ++i;
    while (true) {
        skip();
        if (i >= text.size()) throw ParseError("unterminated BR[...]");
        if (text[i] == ']') {
            ++i;
            break;
        }
        int sign = 1;
        if (text[i] == '-' || text[i] == '+') {
            if (text[i] == '-') sign = -1;
            ++i;
        }
        s = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == s) throw ParseError("expected braid letter");
        int g = std::stoi(text.substr(s, i - s));
        if (g < 1 || g >= b.strands) throw ParseError("braid letter out of range");
        b.word.push_back(sign * g);
    }
    return b;
}

std::string render_braid(const BraidWord& b) {
    std::ostringstream os;
    os << "BR[" << b.strands << ";";
    for (std::size_t k = 0; k < b.word.size(); ++k) os << (k ? "," : " ") << b.word[k];
    os << "]";
    return os.str();
}

LinkDiagram braid_closure(const BraidWord& b) { return tangle_closure(b.tangle()); }

std::vector<int> braid_permutation(const BraidWord& b) {
    std::vector<int> perm(b.strands);
    for (int p = 0; p < b.strands; ++p) perm[p] = p;
    // perm[q] = final position of the strand starting at q.
    for (int w : b.word) {
        int i = std::abs(w) - 1;
        for (int q = 0; q < b.strands; ++q) {
            if (perm[q] == i)
                perm[q] = i + 1;
            else if (perm[q] == i + 1)
                perm[q] = i;
        }
    }
    return perm;
}

int cycle_count(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t q = 0; q < perm.size(); ++q) {
        if (seen[q]) continue;
        ++cycles;
        std::size_t r = q;
        while (!seen[r]) {
            seen[r] = 1;
            r = static_cast<std::size_t>(perm[r]);
        }
    }
    return cycles;
}

}  // namespace splitbound
