#include "context.hpp"

#include <set>

namespace euob {

std::shared_ptr<const VarContext> VarContext::make(std::vector<BlockSpec> specs) {
    auto ctx = std::make_shared<VarContext>();
    std::set<std::string> seen;
    std::set<std::string> block_names;
    for (auto& spec : specs) {
        if (spec.vars.empty()) throw_schema("block '" + spec.name + "' has no variables");
        if (!block_names.insert(spec.name).second)
            throw_schema("duplicate block name '" + spec.name + "'");
        Block b;
        b.name = spec.name;
        b.lo = static_cast<int>(ctx->names_.size());
        b.projective = spec.projective;
        for (auto& v : spec.vars) {
            if (v.empty()) throw_schema("empty variable name");
            if (!seen.insert(v).second) throw_schema("duplicate variable '" + v + "'");
            ctx->names_.push_back(v);
        }
        b.hi = static_cast<int>(ctx->names_.size());
        if (b.projective && b.size() < 2)
            throw_schema("projective block '" + spec.name + "' needs at least 2 variables");
        ctx->blocks_.push_back(std::move(b));
    }
    if (ctx->names_.empty()) throw_schema("variable context is empty");
    if (ctx->nvars() > kMaxVars)
        throw_schema("too many variables (" + std::to_string(ctx->nvars()) + " > " +
                     std::to_string(kMaxVars) + ")");
    return ctx;
}

int VarContext::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

int VarContext::block_of_var(int v) const {
    for (int b = 0; b < nblocks(); ++b)
        if (v >= blocks_[b].lo && v < blocks_[b].hi) return b;
    throw_internal("variable index out of range");
}

int VarContext::block_index(const std::string& name) const {
    for (int b = 0; b < nblocks(); ++b)
        if (blocks_[b].name == name) return b;
    return -1;
}

namespace {

VarContext::BlockSpec spec_of(const VarContext& ctx, const Block& b) {
    VarContext::BlockSpec s;
    s.name = b.name;
    s.projective = b.projective;
    for (int i = b.lo; i < b.hi; ++i) s.vars.push_back(ctx.var_name(i));
    return s;
}

}  // namespace

CtxPtr ctx_insert_block_front(const CtxPtr& ctx, VarContext::BlockSpec spec,
                              std::vector<int>* old_to_new) {
    std::vector<VarContext::BlockSpec> specs;
    int shift = static_cast<int>(spec.vars.size());
    specs.push_back(std::move(spec));
    for (const auto& b : ctx->blocks()) specs.push_back(spec_of(*ctx, b));
    if (old_to_new) {
        old_to_new->clear();
        for (int i = 0; i < ctx->nvars(); ++i) old_to_new->push_back(i + shift);
    }
    return VarContext::make(std::move(specs));
}

CtxPtr ctx_append_block(const CtxPtr& ctx, VarContext::BlockSpec spec,
                        std::vector<int>* old_to_new) {
    std::vector<VarContext::BlockSpec> specs;
    for (const auto& b : ctx->blocks()) specs.push_back(spec_of(*ctx, b));
    specs.push_back(std::move(spec));
    if (old_to_new) {
        old_to_new->clear();
        for (int i = 0; i < ctx->nvars(); ++i) old_to_new->push_back(i);
    }
    return VarContext::make(std::move(specs));
}

CtxPtr ctx_drop_block(const CtxPtr& ctx, int block, std::vector<int>* old_to_new) {
    std::vector<VarContext::BlockSpec> specs;
    for (int b = 0; b < ctx->nblocks(); ++b)
        if (b != block) specs.push_back(spec_of(*ctx, ctx->block(b)));
    if (old_to_new) {
        old_to_new->assign(ctx->nvars(), -1);
        int next = 0;
        for (int b = 0; b < ctx->nblocks(); ++b) {
            if (b == block) continue;
            for (int i = ctx->block(b).lo; i < ctx->block(b).hi; ++i)
                (*old_to_new)[i] = next++;
        }
    }
    return VarContext::make(std::move(specs));
}

}  // namespace euob
