//! Exact scalars: rationals, cyclotomic fields and decidable subrings.

mod cyclotomic;
mod subring;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, FieldScalar};
pub use subring::{in_subring, is_prime, p_valuation, prime_divisors, SubringSpec, Valuation};
