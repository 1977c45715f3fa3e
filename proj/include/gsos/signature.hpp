#pragma once

#include "gsos/common.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gsos
{

// What an operator's parameter slots mean. Rule-driven languages use label
// parameters (the prefix family); the built-in imperative language stores
// variable/expression indices instead.
enum class param_kind { label, var, expr };

struct operator_info
{
    std::string name;
    int arity = 0;
    std::vector<param_kind> params; // one entry per parameter slot
};

// A first-order signature together with the declared label alphabet.
// Labels always contain the silent action at index 0; visible labels may be
// paired by an involution (action/coaction).
class signature
{
public:
    signature() { labels_.push_back( "tau" ); coaction_.push_back( -1 ); }

    label_id add_label( std::string name )
    {
        for ( std::size_t i = 0; i < labels_.size(); ++i )
            if ( labels_[ i ] == name )
                return static_cast<label_id>( i );
        labels_.push_back( std::move( name ) );
        coaction_.push_back( -1 );
        return static_cast<label_id>( labels_.size() - 1 );
    }

    void pair_labels( label_id a, label_id b )
    {
        if ( a == tau_label || b == tau_label )
            throw coaction_of_tau( "tau cannot be paired with a coaction" );
        coaction_[ a ] = b;
        coaction_[ b ] = a;
    }

    std::int32_t add_operator( operator_info op )
    {
        for ( const auto& o : ops_ )
            if ( o.name == op.name )
                throw duplicate_operator( "operator '" + op.name + "' declared twice" );
        ops_.push_back( std::move( op ) );
        return static_cast<std::int32_t>( ops_.size() - 1 );
    }

    std::optional<label_id> find_label( std::string_view name ) const
    {
        for ( std::size_t i = 0; i < labels_.size(); ++i )
            if ( labels_[ i ] == name )
                return static_cast<label_id>( i );
        return std::nullopt;
    }

    std::optional<std::int32_t> find_operator( std::string_view name ) const
    {
        for ( std::size_t i = 0; i < ops_.size(); ++i )
            if ( ops_[ i ].name == name )
                return static_cast<std::int32_t>( i );
        return std::nullopt;
    }

    label_id bar( label_id l ) const
    {
        if ( l == tau_label )
            throw tau_has_no_coaction( "tau has no coaction" );
        if ( l < 0 || l >= static_cast<label_id>( coaction_.size() ) )
            throw undeclared_label( "label id out of range" );
        if ( coaction_[ l ] < 0 )
            throw unpaired_label( "label '" + labels_[ l ] + "' has no declared coaction" );
        return coaction_[ l ];
    }

    bool has_bar( label_id l ) const { return l != tau_label && coaction_[ l ] >= 0; }

    int label_count() const { return static_cast<int>( labels_.size() ); }
    int operator_count() const { return static_cast<int>( ops_.size() ); }
    const std::string& label_name( label_id l ) const { return labels_[ l ]; }
    const operator_info& op( std::int32_t i ) const { return ops_[ i ]; }
    const std::vector<operator_info>& operators() const { return ops_; }
    const std::vector<std::string>& labels() const { return labels_; }
    label_id coaction_of( label_id l ) const { return coaction_[ l ]; }

    std::vector<label_id> visible_labels() const
    {
        std::vector<label_id> out;
        for ( label_id l = 1; l < label_count(); ++l )
            out.push_back( l );
        return out;
    }

private:
    std::vector<std::string> labels_;
    std::vector<label_id> coaction_;
    std::vector<operator_info> ops_;
};

} // namespace gsos
