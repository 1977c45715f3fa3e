#include "gsos/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gsos
{

term flatten( const term& t )
{
    if ( t.is_leaf() )
        return t;
    if ( t.is_boxed() )
        return flatten( t.inner() );
    std::vector<term> kids;
    kids.reserve( t.children().size() );
    for ( const auto& c : t.children() )
        kids.push_back( flatten( c ) );
    return term::node( t.op(), t.params(), std::move( kids ) );
}

term map_leaves( const term& t, const std::function<term( std::int32_t )>& f )
{
    if ( t.is_leaf() )
        return f( t.atom() );
    if ( t.is_boxed() )
        return term::boxed( map_leaves( t.inner(), f ) );
    std::vector<term> kids;
    kids.reserve( t.children().size() );
    for ( const auto& c : t.children() )
        kids.push_back( map_leaves( c, f ) );
    return term::node( t.op(), t.params(), std::move( kids ) );
}

void collect_leaf_atoms( const term& t, std::vector<std::int32_t>& out )
{
    if ( t.is_leaf() ) { out.push_back( t.atom() ); return; }
    if ( t.is_boxed() ) { collect_leaf_atoms( t.inner(), out ); return; }
    for ( const auto& c : t.children() )
        collect_leaf_atoms( c, out );
}

namespace
{

enum class display { atom, prefix, infix_sum, infix_par, bracket, call };

display display_of( const signature& sig, std::int32_t op )
{
    const auto& info = sig.op( op );
    if ( info.arity == 0 && info.params.empty() )
        return display::atom;
    if ( info.name == "pre" && info.arity == 1 && info.params.size() == 1
         && info.params[ 0 ] == param_kind::label )
        return display::prefix;
    if ( info.name == "sum" && info.arity == 2 )
        return display::infix_sum;
    if ( info.name == "par" && info.arity == 2 )
        return display::infix_par;
    if ( info.name == "test" && info.arity == 1 && info.params.empty() )
        return display::bracket;
    return display::call;
}

void print_rec( const term& t, const signature& sig, const leaf_namer& leaves,
                std::string& out, bool parenthesize_infix )
{
    if ( t.is_leaf() ) { out += leaves( t.atom() ); return; }
    if ( t.is_boxed() ) { print_rec( t.inner(), sig, leaves, out, parenthesize_infix ); return; }
    switch ( display_of( sig, t.op() ) )
    {
        case display::atom:
            out += sig.op( t.op() ).name;
            return;
        case display::prefix:
            out += sig.label_name( t.params()[ 0 ] );
            out += '.';
            print_rec( t.children()[ 0 ], sig, leaves, out, true );
            return;
        case display::infix_sum:
        case display::infix_par:
        {
            const char* sep = display_of( sig, t.op() ) == display::infix_sum ? " + " : " || ";
            if ( parenthesize_infix ) out += '(';
            print_rec( t.children()[ 0 ], sig, leaves, out, true );
            out += sep;
            print_rec( t.children()[ 1 ], sig, leaves, out, true );
            if ( parenthesize_infix ) out += ')';
            return;
        }
        case display::bracket:
            out += '[';
            print_rec( t.children()[ 0 ], sig, leaves, out, false );
            out += ']';
            return;
        case display::call:
        {
            out += sig.op( t.op() ).name;
            if ( !t.params().empty() )
            {
                out += '[';
                for ( std::size_t i = 0; i < t.params().size(); ++i )
                {
                    if ( i ) out += ',';
                    out += sig.label_name( t.params()[ i ] );
                }
                out += ']';
            }
            if ( !t.children().empty() )
            {
                out += '(';
                for ( std::size_t i = 0; i < t.children().size(); ++i )
                {
                    if ( i ) out += ", ";
                    print_rec( t.children()[ i ], sig, leaves, out, false );
                }
                out += ')';
            }
            return;
        }
    }
}

struct parser
{
    std::string_view text;
    std::size_t pos = 0;
    int line = 1, col = 1;
    const signature& sig;
    pattern_env* env = nullptr; // null => closed-term mode

    parser( std::string_view t, const signature& s ) : text{ t }, sig{ s } {}

    [[noreturn]] void fail( const std::string& msg ) { throw syntax_error( msg, line, col ); }

    void advance( std::size_t n )
    {
        for ( std::size_t i = 0; i < n && pos < text.size(); ++i, ++pos )
        {
            if ( text[ pos ] == '\n' ) { ++line; col = 1; }
            else ++col;
        }
    }

    void skip_ws()
    {
        while ( pos < text.size() )
        {
            char c = text[ pos ];
            if ( c == '#' )
            {
                while ( pos < text.size() && text[ pos ] != '\n' ) advance( 1 );
            }
            else if ( std::isspace( static_cast<unsigned char>( c ) ) )
                advance( 1 );
            else
                break;
        }
    }

    bool eat( std::string_view tok )
    {
        skip_ws();
        if ( text.substr( pos, tok.size() ) == tok )
        {
            advance( tok.size() );
            return true;
        }
        return false;
    }

    bool peek( std::string_view tok )
    {
        skip_ws();
        return text.substr( pos, tok.size() ) == tok;
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos;
        while ( pos < text.size() )
        {
            char c = text[ pos ];
            if ( std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '\'' )
                advance( 1 );
            else
                break;
        }
        if ( pos == start )
            fail( "expected identifier" );
        return std::string( text.substr( start, pos - start ) );
    }

    std::int32_t leaf_atom( const std::string& name )
    {
        if ( !env )
            throw unknown_operator( "unknown operator '" + name + "'" );
        for ( std::size_t i = 0; i < env->vars->size(); ++i )
            if ( ( *env->vars )[ i ] == name )
                return static_cast<std::int32_t>( i );
        env->vars->push_back( name );
        return static_cast<std::int32_t>( env->vars->size() - 1 );
    }

    // A label position: a declared label, or in pattern mode a metavariable
    // (optionally under the coaction marker `~`).
    std::int32_t label_slot( std::string name, bool& is_meta, bool& is_coaction )
    {
        is_meta = false;
        is_coaction = false;
        if ( auto l = sig.find_label( name ) )
            return *l;
        if ( env && env->metavars )
        {
            for ( std::size_t i = 0; i < env->metavars->size(); ++i )
                if ( ( *env->metavars )[ i ] == name )
                {
                    is_meta = true;
                    if ( env->metavar_used ) ( *env->metavar_used )[ i ] = true;
                    return static_cast<std::int32_t>( i );
                }
        }
        throw undeclared_label( "undeclared label '" + name + "'" );
    }

    term atom_term()
    {
        skip_ws();
        if ( pos >= text.size() )
            fail( "unexpected end of input" );
        if ( eat( "(" ) )
        {
            term t = infix_term();
            if ( !eat( ")" ) ) fail( "expected ')'" );
            return t;
        }
        if ( eat( "[" ) )
        {
            term inner = infix_term();
            if ( !eat( "]" ) ) fail( "expected ']'" );
            auto op = sig.find_operator( "test" );
            if ( !op )
                throw unknown_operator( "no 'test' operator declared for [...] syntax" );
            return term::node( *op, {}, { std::move( inner ) } );
        }
        std::string name = ident();
        skip_ws();
        // prefix sugar `l.t` — also allows metavariables in pattern mode
        if ( pos < text.size() && text[ pos ] == '.' )
        {
            advance( 1 );
            auto op = sig.find_operator( "pre" );
            if ( !op )
                throw unknown_operator( "no 'pre' operator declared for prefix syntax" );
            bool is_meta = false, is_co = false;
            std::int32_t slot = label_slot( name, is_meta, is_co );
            term child = atom_term();
            // metavariable parameters are encoded as negative ids: -(index+1)
            std::int32_t param = is_meta ? -( slot + 1 ) : slot;
            return term::node( *op, { param }, { std::move( child ) } );
        }
        if ( pos < text.size() && text[ pos ] == '[' )
        {
            // general op with label parameters: name[l1,...](args)
            auto op = sig.find_operator( name );
            if ( !op )
                throw unknown_operator( "unknown operator '" + name + "'" );
            advance( 1 );
            std::vector<std::int32_t> params;
            while ( true )
            {
                std::string lab = ident();
                bool is_meta = false, is_co = false;
                std::int32_t slot = label_slot( lab, is_meta, is_co );
                params.push_back( is_meta ? -( slot + 1 ) : slot );
                if ( eat( "]" ) ) break;
                if ( !eat( "," ) ) fail( "expected ',' or ']'" );
            }
            std::vector<term> args = call_args( *op );
            return term::node( *op, std::move( params ), std::move( args ) );
        }
        if ( peek( "(" ) )
        {
            auto op = sig.find_operator( name );
            if ( !op )
                throw unknown_operator( "unknown operator '" + name + "'" );
            std::vector<term> args = call_args( *op );
            return term::node( *op, {}, std::move( args ) );
        }
        if ( auto op = sig.find_operator( name ) )
        {
            const auto& info = sig.op( *op );
            if ( info.arity != 0 || !info.params.empty() )
                throw arity_mismatch( "operator '" + name + "' used without arguments" );
            return term::node( *op, {}, {} );
        }
        return term::leaf( leaf_atom( name ) );
    }

    std::vector<term> call_args( std::int32_t op )
    {
        std::vector<term> args;
        if ( eat( "(" ) )
        {
            if ( !peek( ")" ) )
            {
                args.push_back( infix_term() );
                while ( eat( "," ) )
                    args.push_back( infix_term() );
            }
            if ( !eat( ")" ) ) fail( "expected ')'" );
        }
        const auto& info = sig.op( op );
        if ( static_cast<int>( args.size() ) != info.arity )
            throw arity_mismatch( "operator '" + info.name + "' expects "
                                  + std::to_string( info.arity ) + " arguments, got "
                                  + std::to_string( args.size() ) );
        return args;
    }

    term infix_term()
    {
        term lhs = atom_term();
        while ( true )
        {
            skip_ws();
            if ( peek( "+" ) && !peek( "+)" ) )
            {
                eat( "+" );
                auto op = sig.find_operator( "sum" );
                if ( !op )
                    throw unknown_operator( "no 'sum' operator declared for + syntax" );
                term rhs = atom_term();
                lhs = term::node( *op, {}, { std::move( lhs ), std::move( rhs ) } );
            }
            else if ( peek( "||" ) )
            {
                eat( "||" );
                auto op = sig.find_operator( "par" );
                if ( !op )
                    throw unknown_operator( "no 'par' operator declared for || syntax" );
                term rhs = atom_term();
                lhs = term::node( *op, {}, { std::move( lhs ), std::move( rhs ) } );
            }
            else
                break;
        }
        return lhs;
    }

    term parse_whole()
    {
        term t = infix_term();
        skip_ws();
        if ( pos != text.size() )
            fail( "trailing input after term" );
        return t;
    }
};

} // namespace

std::string print_term( const term& t, const signature& sig, const leaf_namer& leaves )
{
    std::string out;
    print_rec( t, sig, leaves, out, false );
    return out;
}

term parse_term( std::string_view text, const signature& sig )
{
    parser p( text, sig );
    return p.parse_whole();
}

term parse_term_pattern( std::string_view text, const signature& sig, pattern_env& env )
{
    parser p( text, sig );
    p.env = &env;
    return p.parse_whole();
}

bool term_less( const term& a, const term& b, const signature& sig )
{
    int sa = a.size(), sb = b.size();
    if ( sa != sb ) return sa < sb;
    return print_term( a, sig ) < print_term( b, sig );
}

std::vector<term> enumerate_terms( const signature& sig, int depth,
                                   std::span<const std::int32_t> leaf_atoms )
{
    // by_height[h] = terms of height exactly h
    std::vector<std::vector<term>> by_height;
    std::vector<term> all;

    auto sort_canonical = [&]( std::vector<term>& ts )
    {
        std::sort( ts.begin(), ts.end(), [&]( const term& x, const term& y )
        {
            if ( x.size() != y.size() ) return x.size() < y.size();
            return print_term( x, sig ) < print_term( y, sig );
        } );
    };

    std::vector<term> h0;
    for ( auto a : leaf_atoms )
        h0.push_back( term::leaf( a ) );
    for ( std::int32_t o = 0; o < sig.operator_count(); ++o )
        if ( sig.op( o ).arity == 0 && sig.op( o ).params.empty() )
            h0.push_back( term::node( o, {}, {} ) );
    sort_canonical( h0 );
    by_height.push_back( h0 );
    all = h0;

    for ( int h = 1; h <= depth; ++h )
    {
        std::vector<term> fresh;
        // cumulative list of strictly lower terms
        std::vector<const term*> lower;
        for ( const auto& layer : by_height )
            for ( const auto& t : layer )
                lower.push_back( &t );

        for ( std::int32_t o = 0; o < sig.operator_count(); ++o )
        {
            const auto& info = sig.op( o );
            if ( info.arity == 0 )
                continue;
            bool label_params_ok = true;
            for ( auto pk : info.params )
                if ( pk != param_kind::label ) { label_params_ok = false; break; }
            if ( !label_params_ok )
                continue;

            std::vector<std::vector<std::int32_t>> param_choices{ {} };
            for ( std::size_t pi = 0; pi < info.params.size(); ++pi )
            {
                std::vector<std::vector<std::int32_t>> next;
                for ( const auto& base : param_choices )
                    for ( label_id l = 0; l < sig.label_count(); ++l )
                    {
                        auto ext = base;
                        ext.push_back( l );
                        next.push_back( std::move( ext ) );
                    }
                param_choices = std::move( next );
            }

            // argument tuples with at least one child of height h-1
            std::vector<std::size_t> idx( info.arity, 0 );
            const std::size_t n = lower.size();
            if ( n == 0 ) continue;
            while ( true )
            {
                bool tall_enough = false;
                for ( int i = 0; i < info.arity; ++i )
                    if ( lower[ idx[ i ] ]->height() == h - 1 ) { tall_enough = true; break; }
                if ( tall_enough )
                {
                    std::vector<term> kids;
                    for ( int i = 0; i < info.arity; ++i )
                        kids.push_back( *lower[ idx[ i ] ] );
                    for ( const auto& ps : param_choices )
                        fresh.push_back( term::node( o, ps, kids ) );
                }
                int i = info.arity - 1;
                while ( i >= 0 && ++idx[ i ] == n ) { idx[ i ] = 0; --i; }
                if ( i < 0 ) break;
            }
        }
        sort_canonical( fresh );
        all.insert( all.end(), fresh.begin(), fresh.end() );
        by_height.push_back( std::move( fresh ) );
    }
    return all;
}

} // namespace gsos
