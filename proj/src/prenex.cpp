#include "ordlab/logic.hpp"

namespace ordlab::logic {

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> children) {
    return std::make_shared<const FormulaNode>(FormulaNode{f->kind, f->lhs, f->rhs, std::move(children), f->vars});
}

Formula nnf_impl(const Formula& f, bool negate) {
    switch (f->kind) {
        case Kind::Eq: return negate ? neq(f->lhs, f->rhs) : f;
        case Kind::Neq: return negate ? eq(f->lhs, f->rhs) : f;
        case Kind::Not: return nnf_impl(f->body(), !negate);
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> ch;
            for (const auto& c : f->children) ch.push_back(nnf_impl(c, negate));
            bool conj = (f->kind == Kind::And) != negate;
            return conj ? land(std::move(ch)) : lor(std::move(ch));
        }
        case Kind::Implies: {
            Formula a = nnf_impl(f->children[0], !negate);
            Formula b = nnf_impl(f->children[1], negate);
            return negate ? land({a, b}) : lor({a, b});
        }
        case Kind::Exists:
        case Kind::Forall: {
            bool ex = (f->kind == Kind::Exists) != negate;
            return quantify(ex ? Quant::Exists : Quant::Forall, f->vars, nnf_impl(f->body(), negate));
        }
    }
    return f;
}

Formula rename_free(const Formula& f, const std::map<std::string, std::string>& m) {
    if (m.empty()) return f;
    if (f->kind == Kind::Eq || f->kind == Kind::Neq)
        return std::make_shared<const FormulaNode>(
            FormulaNode{f->kind, rename_term(f->lhs, m), rename_term(f->rhs, m), {}, {}});
    if (is_quantifier(f->kind)) {
        auto inner = m;
        for (const auto& v : f->vars) inner.erase(v);
        return rebuild(f, {rename_free(f->body(), inner)});
    }
    std::vector<Formula> ch;
    for (const auto& c : f->children) ch.push_back(rename_free(c, m));
    return rebuild(f, std::move(ch));
}

Formula rename_apart(const Formula& f, NameSupply& names, const std::map<std::string, std::string>& scope) {
    if (f->kind == Kind::Eq || f->kind == Kind::Neq) return rename_free(f, scope);
    if (is_quantifier(f->kind)) {
        auto inner = scope;
        std::vector<std::string> vars;
        for (const auto& v : f->vars) {
            std::string nv = names.used(v) ? names.fresh(base_name(v)) : names.fresh(v);
            vars.push_back(nv);
            if (nv == v)
                inner.erase(v);
            else
                inner[v] = nv;
        }
        return quantify(f->kind == Kind::Exists ? Quant::Exists : Quant::Forall, std::move(vars),
                        rename_apart(f->body(), names, inner));
    }
    std::vector<Formula> ch;
    for (const auto& c : f->children) ch.push_back(rename_apart(c, names, scope));
    return rebuild(f, std::move(ch));
}

void push_block(std::vector<QuantBlock>& blocks, Quant q, const std::vector<std::string>& vars) {
    if (vars.empty()) return;
    if (!blocks.empty() && blocks.back().quant == q)
        blocks.back().vars.insert(blocks.back().vars.end(), vars.begin(), vars.end());
    else
        blocks.push_back({q, vars});
}

PrenexParts pull(const Formula& f) {
    if (f->kind == Kind::Eq || f->kind == Kind::Neq) return {{}, f};
    if (is_quantifier(f->kind)) {
        PrenexParts inner = pull(f->body());
        PrenexParts out;
        push_block(out.blocks, f->kind == Kind::Exists ? Quant::Exists : Quant::Forall, f->vars);
        for (const auto& b : inner.blocks) push_block(out.blocks, b.quant, b.vars);
        out.matrix = inner.matrix;
        return out;
    }
    if (f->kind != Kind::And && f->kind != Kind::Or) throw Error("pull expects a formula in negation normal form");

    bool conj = f->kind == Kind::And;
    Quant concatenated = conj ? Quant::Exists : Quant::Forall;
    Quant shared = conj ? Quant::Forall : Quant::Exists;

    std::vector<PrenexParts> parts;
    for (const auto& c : f->children) parts.push_back(pull(c));
    std::vector<std::size_t> head(parts.size(), 0);
    auto has_block = [&](std::size_t i) { return head[i] < parts[i].blocks.size(); };

    PrenexParts out;
    for (;;) {
        bool any = false, any_concat = false;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!has_block(i)) continue;
            any = true;
            if (parts[i].blocks[head[i]].quant == concatenated) any_concat = true;
        }
        if (!any) break;
        if (any_concat) {
            std::vector<std::string> vars;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (!has_block(i) || parts[i].blocks[head[i]].quant != concatenated) continue;
                const auto& vs = parts[i].blocks[head[i]++].vars;
                vars.insert(vars.end(), vs.begin(), vs.end());
            }
            push_block(out.blocks, concatenated, vars);
            continue;
        }
        // every remaining head is of the shared kind: merge position by position
        std::vector<std::string> slots;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!has_block(i)) continue;
            const auto& vs = parts[i].blocks[head[i]].vars;
            std::map<std::string, std::string> ren;
            for (std::size_t k = 0; k < vs.size(); ++k) {
                if (k >= slots.size())
                    slots.push_back(vs[k]);
                else
                    ren[vs[k]] = slots[k];
            }
            parts[i].matrix = rename_free(parts[i].matrix, ren);
            ++head[i];
        }
        push_block(out.blocks, shared, slots);
    }

    std::vector<Formula> ms;
    for (auto& p : parts) {
        if (p.matrix->kind == f->kind)
            ms.insert(ms.end(), p.matrix->children.begin(), p.matrix->children.end());
        else
            ms.push_back(p.matrix);
    }
    out.matrix = conj ? land(std::move(ms)) : lor(std::move(ms));
    return out;
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_impl(f, false); }

bool is_prenex(const Formula& f) {
    const FormulaNode* n = f.get();
    while (is_quantifier(n->kind)) n = n->body().get();
    for (const auto& c : n->children)
        if (!is_quantifier_free(c)) return false;
    return true;
}

PrenexParts split_prenex(const Formula& f) {
    PrenexParts out;
    Formula cur = f;
    while (is_quantifier(cur->kind)) {
        push_block(out.blocks, cur->kind == Kind::Exists ? Quant::Exists : Quant::Forall, cur->vars);
        cur = cur->body();
    }
    if (!is_quantifier_free(cur)) throw Error("formula is not in prenex form");
    out.matrix = cur;
    return out;
}

Formula build_prenex(const std::vector<QuantBlock>& blocks, Formula matrix) {
    std::vector<QuantBlock> merged;
    for (const auto& b : blocks) push_block(merged, b.quant, b.vars);
    for (std::size_t i = merged.size(); i-- > 0;) matrix = quantify(merged[i].quant, merged[i].vars, matrix);
    return matrix;
}

Formula prenex(const Formula& f) {
    if (is_prenex(f)) return f;
    Formula g = nnf(f);
    NameSupply names(free_vars(g));
    g = rename_apart(g, names, {});
    PrenexParts p = pull(g);
    return build_prenex(p.blocks, p.matrix);
}

PrefixClass prefix_class(const Formula& f) {
    PrenexParts p = split_prenex(is_prenex(f) ? f : prenex(f));
    PrefixClass c;
    for (const auto& b : p.blocks) c.entries.push_back({b.quant, b.vars.size()});
    return c;
}

}  // namespace ordlab::logic
