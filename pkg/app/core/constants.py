# Exit codes
EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_GATE = 3
EXIT_CAP = 4

# Output formats
FORMAT_TEXT = "text"
FORMAT_JSON = "json"

# ADE families
KIND_A = "A"
KIND_D = "D"
KIND_E6 = "E6"
KIND_E7 = "E7"
KIND_E8 = "E8"
E_KINDS = (KIND_E6, KIND_E7, KIND_E8)

# Least admissible characteristic per family
MIN_CHARACTERISTIC = {
    KIND_A: 2,
    KIND_D: 3,
    KIND_E6: 5,
    KIND_E7: 5,
    KIND_E8: 7,
}

# Orders of the exceptional groups
E_ORDERS = {KIND_E6: 24, KIND_E7: 48, KIND_E8: 120}
E_BY_ORDER = {order: kind for kind, order in E_ORDERS.items()}

# Generator degrees and relation degree of the exceptional invariant rings
E_DEGREES = {
    KIND_E6: ((6, 8, 12), 24),
    KIND_E7: ((8, 12, 18), 36),
    KIND_E8: ((12, 20, 30), 60),
}

# Error messages
ERROR_CROSS_FIELD = "Operands live in different fields"
ERROR_SINGULAR = "Matrix is singular"
ERROR_NOT_LINEARLY_REDUCTIVE = "Group order is divisible by the characteristic"
