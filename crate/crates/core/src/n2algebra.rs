//! Closed-form N=2 Lie algebra. (under construction)
