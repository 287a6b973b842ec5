#pragma once

#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace euob {

constexpr int kMaxVars = 16;

// A contiguous run of variables sharing a geometric role.  Projective blocks
// carry their own grading and each consumes one affine slice when counted.
struct Block {
    std::string name;
    int lo = 0;  // first variable index
    int hi = 0;  // one past last
    bool projective = false;

    int size() const { return hi - lo; }
};

// Immutable list of named variables partitioned into blocks.  Shared by
// pointer; polynomials over different contexts never mix.
class VarContext {
public:
    struct BlockSpec {
        std::string name;
        std::vector<std::string> vars;
        bool projective = false;
    };

    static std::shared_ptr<const VarContext> make(std::vector<BlockSpec> specs);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::string& var_name(int i) const { return names_[i]; }
    // -1 when absent
    int var_index(const std::string& name) const;

    int nblocks() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int b) const { return blocks_[b]; }
    int block_of_var(int v) const;
    // -1 when absent
    int block_index(const std::string& name) const;
    const std::vector<Block>& blocks() const { return blocks_; }

private:
    std::vector<std::string> names_;
    std::vector<Block> blocks_;
};

using CtxPtr = std::shared_ptr<const VarContext>;

// Context surgery for elimination setups.  Each returns the variable index
// mapping from the old context into the new one (-1 where dropped).
CtxPtr ctx_insert_block_front(const CtxPtr& ctx, VarContext::BlockSpec spec,
                              std::vector<int>* old_to_new);
CtxPtr ctx_append_block(const CtxPtr& ctx, VarContext::BlockSpec spec,
                        std::vector<int>* old_to_new);
CtxPtr ctx_drop_block(const CtxPtr& ctx, int block, std::vector<int>* old_to_new);

}  // namespace euob
