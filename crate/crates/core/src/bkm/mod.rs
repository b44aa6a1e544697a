//! BKM matrices, denominators, Hecke operators, characters. (under construction)
