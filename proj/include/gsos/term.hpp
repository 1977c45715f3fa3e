#pragma once

#include "gsos/common.hpp"
#include "gsos/signature.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gsos
{

// Free syntax over a signature, as a plain value-semantics tree. Leaves hold
// an atom (an abstract state or a rule variable, depending on context) or a
// nested term, which only flatten() resolves. Equality is syntactic.
class term
{
public:
    struct leaf_t { std::int32_t atom; };
    struct boxed_t { std::shared_ptr<const term> inner; };
    struct node_t
    {
        std::int32_t op;
        std::vector<std::int32_t> params;
        std::vector<term> children;
    };

    static term leaf( std::int32_t atom ) { return term( leaf_t{ atom } ); }
    static term boxed( term inner )
    {
        return term( boxed_t{ std::make_shared<const term>( std::move( inner ) ) } );
    }
    static term node( std::int32_t op, std::vector<std::int32_t> params, std::vector<term> children )
    {
        return term( node_t{ op, std::move( params ), std::move( children ) } );
    }

    bool is_leaf() const { return std::holds_alternative<leaf_t>( v_ ); }
    bool is_boxed() const { return std::holds_alternative<boxed_t>( v_ ); }
    bool is_node() const { return std::holds_alternative<node_t>( v_ ); }

    std::int32_t atom() const { return std::get<leaf_t>( v_ ).atom; }
    const term& inner() const { return *std::get<boxed_t>( v_ ).inner; }
    std::int32_t op() const { return std::get<node_t>( v_ ).op; }
    const std::vector<std::int32_t>& params() const { return std::get<node_t>( v_ ).params; }
    const std::vector<term>& children() const { return std::get<node_t>( v_ ).children; }

    int size() const
    {
        if ( is_leaf() ) return 1;
        if ( is_boxed() ) return inner().size();
        int n = 1;
        for ( const auto& c : children() ) n += c.size();
        return n;
    }

    int height() const
    {
        if ( is_leaf() ) return 0;
        if ( is_boxed() ) return inner().height();
        int h = 0;
        for ( const auto& c : children() ) h = std::max( h, c.height() );
        return children().empty() ? 0 : h + 1;
    }

    friend bool operator==( const term& a, const term& b )
    {
        if ( a.v_.index() != b.v_.index() )
        {
            // boxed leaves compare through their content only via flatten;
            // raw comparison is structural
            return false;
        }
        if ( a.is_leaf() ) return a.atom() == b.atom();
        if ( a.is_boxed() ) return a.inner() == b.inner();
        return a.op() == b.op() && a.params() == b.params() && a.children() == b.children();
    }
    friend bool operator!=( const term& a, const term& b ) { return !( a == b ); }

private:
    explicit term( std::variant<leaf_t, boxed_t, node_t> v ) : v_{ std::move( v ) } {}
    std::variant<leaf_t, boxed_t, node_t> v_;
};

// Resolves nested-term leaves, one level per pass; identity on atoms.
term flatten( const term& t );

// Applies f to every leaf atom, keeping structure.
term map_leaves( const term& t, const std::function<term( std::int32_t )>& f );

void collect_leaf_atoms( const term& t, std::vector<std::int32_t>& out );

using leaf_namer = std::function<std::string( std::int32_t )>;

// Concrete syntax. Operators named "pre" print as `l.t`, "sum" as infix `+`,
// "par" as infix `||`, "test" as `[t]`; everything else as `name(...)`.
std::string print_term( const term& t, const signature& sig,
                        const leaf_namer& leaves = default_state_name );

// Parses closed terms (identifiers must name operators). With `pattern`
// set, unknown identifiers become variable leaves appended to `vars`, and
// label positions may mention metavariables from `metavars`.
struct pattern_env
{
    std::vector<std::string>* vars = nullptr;     // leaf atoms index into this
    const std::vector<std::string>* metavars = nullptr;
    std::vector<bool>* metavar_used = nullptr;
};

term parse_term( std::string_view text, const signature& sig );
term parse_term_pattern( std::string_view text, const signature& sig, pattern_env& env );

// All terms of height <= depth whose leaves come from `leaf_atoms` (labels of
// parameter slots range over the declared alphabet). Ordered by height, then
// size, then printed form, so each depth's list is a prefix of the next.
std::vector<term> enumerate_terms( const signature& sig, int depth,
                                   std::span<const std::int32_t> leaf_atoms = {} );

// Witness-minimality order: size first, then printed form.
bool term_less( const term& a, const term& b, const signature& sig );

} // namespace gsos
