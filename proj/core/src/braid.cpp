#include "qlink/braid.hpp"

#include "qlink/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace qlink {

int BraidWord::closure_components() const {
    std::vector<int> perm(strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& [i, sign] : letters) std::swap(perm[i - 1], perm[i]);
    std::vector<bool> seen(strands, false);
    int cycles = 0;
    for (int i = 0; i < strands; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return cycles;
}

BraidWord parse_braid(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    in >> head;
    if (head != "braid")
        throw ParseError("expected 'braid'", 0);
    int n = 0;
    if (!(in >> n) || n < 1)
        throw ParseError("expected strand count >= 1 after 'braid'");
    std::string colon;
    if (!(in >> colon) || colon != ":")
        throw ParseError("expected ':' after strand count");

    BraidWord b;
    b.strands = n;
    std::string tok;
    while (in >> tok) {
        long pos = static_cast<long>(text.find(tok));
        int sign = 1;
        if (tok.size() > 1 && tok.back() == '\'') {
            sign = -1;
            tok.pop_back();
        }
        if (tok.size() < 2 || tok[0] != 's')
            throw ParseError("bad braid letter '" + tok + "'", pos);
        for (size_t k = 1; k < tok.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(tok[k])))
                throw ParseError("bad braid letter '" + tok + "'", pos);
        int i = std::stoi(tok.substr(1));
        if (i < 1 || i >= n)
            throw ParseError("generator index out of range in '" + tok + "'", pos);
        b.letters.emplace_back(i, sign);
    }
    return b;
}

std::string braid_string(const BraidWord& b) {
    std::ostringstream out;
    out << "braid " << b.strands << " :";
    for (const auto& [i, sign] : b.letters)
        out << " s" << i << (sign < 0 ? "'" : "");
    return out.str();
}

} // namespace qlink
