#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace gsos
{

using state_id = std::int32_t;
using label_id = std::int32_t;
using term_id  = std::int32_t;
using store_id = std::int32_t;

// Label 0 is always the silent action.
inline constexpr label_id tau_label = 0;

struct error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct syntax_error : error
{
    int line, column;
    syntax_error( const std::string& what, int line, int column )
        : error( what + " (line " + std::to_string( line ) + ", column " + std::to_string( column ) + ")" ),
          line{ line }, column{ column } {}
};

struct unknown_operator : error { using error::error; };
struct arity_mismatch : error { using error::error; };
struct duplicate_operator : error { using error::error; };
struct undeclared_label : error { using error::error; };
struct coaction_of_tau : error { using error::error; };
struct tau_has_no_coaction : error { using error::error; };
struct unpaired_label : error { using error::error; };
struct unknown_state : error { using error::error; };
struct budget_exceeded : error { using error::error; };

struct fuel_exhausted : error
{
    using error::error;
};

// Caps for fixpoint computations: states bounds reachable-fragment discovery,
// iterations bounds the ascending chain.
struct fuel_limits
{
    std::int64_t max_states = 10'000;
    std::int64_t max_iterations = 1'000;
};

using rng_t = std::mt19937_64;

inline std::uint64_t mix_seed( std::uint64_t seed, std::uint64_t salt )
{
    // splitmix64 step, so per-case streams are independent of iteration order
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * ( salt + 1 );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
}

// Default names for abstract carrier states in reports: x, y, z, w, s4, s5, ...
inline std::string default_state_name( state_id i )
{
    static const char* first[] = { "x", "y", "z", "w" };
    if ( i >= 0 && i < 4 )
        return first[ i ];
    return "s" + std::to_string( i );
}

} // namespace gsos
