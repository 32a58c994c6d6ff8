#include "wallcheck/lemmas.hpp"
