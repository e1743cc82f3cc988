//! Primitive prime divisors and the integer arithmetic around them.
//!
//! The cyclotomic layer is generic over [`Int`]; the public entry points use
//! arbitrary-precision integers through the [`Integer`] alias.

mod base;
mod bounds;
mod counting;
mod cyclotomic;
mod error;
mod factored;
mod index;
mod order;
pub mod primes;

pub use base::{Sign, SignedBase};
pub use bounds::{
    gpd_exceeds_half_totient, ki_check, ki_check_with_bound, ki_offending_primes,
    large_index_bounds, KiCase, KiCheck,
};
pub use counting::{
    count_eta_interval, direct_r_part, eta_interval_closed_form, least_prime_in_interval,
    lifted_r_part, prime_free_intervals, prime_in_interval, IntervalMode,
};
pub use cyclotomic::{
    cyclotomic_eval, cyclotomic_value, gpd, gpd_value, greatest_primitive_divisor,
    greatest_primitive_divisor_with, has_primitive_prime_divisor, primitive_prime_divisors,
    primitive_prime_divisors_with, Int,
};
pub use error::{ArithError, Result};
pub use factored::{pi_part, FactoredInteger};
pub use index::{divisors, eta, largest_prime_factor, nu, nu_eps, strip_prime, totient, valuation};
pub use order::{has_order, mult_order, mult_order_two, prime_index};
pub use primes::{factorize, factorize_u64, is_prime_u64, is_probable_prime, FactorBudget, Sieve};

/// Arbitrary-precision signed integer used for all exact values.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision unsigned integer used for primes.
pub type Natural = num_bigint::BigUint;

/// The base pairs `(a, i)` with no primitive prime divisor.
pub const ZSIGMONDY_EXCEPTIONS: [(i64, u64); 6] =
    [(2, 1), (2, 6), (-2, 2), (-2, 3), (3, 1), (-3, 2)];
