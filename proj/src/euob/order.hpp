#pragma once

#include <vector>

#include "monomial.hpp"

namespace euob {

// Term orders.  Grevlex is the workhorse; Lex and Block exist for
// elimination.  A Block order compares block by block (degree first, then
// reverse lex within the block), so variables in earlier blocks dominate and
// eliminating a leading block is sound.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex(const CtxPtr& ctx);
    static MonomialOrder lex(const CtxPtr& ctx);
    // Compares ctx blocks in their natural order, grevlex inside each.
    static MonomialOrder block(const CtxPtr& ctx);

    Kind kind() const { return kind_; }
    int nvars() const { return nvars_; }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && nvars_ == o.nvars_ && spans_ == o.spans_;
    }

private:
    Kind kind_ = Kind::Grevlex;
    int nvars_ = 0;
    std::vector<std::pair<int, int>> spans_;  // Block: [lo,hi) runs in comparison order
};

}  // namespace euob
