"""CLI invocations pinned by golden files in ``tests/golden``."""

CASES = {
    "dim_stair4": ["dim", "stair:4"],
    "dim_json": ["dim", "5,2,1", "--format", "json"],
    "charratio_mn": ["charratio", "4,3,2,1", "--r", "3"],
    "charratio_closed": ["charratio", "3,1", "--r", "2", "--method", "closed"],
    "charratio_trace": ["charratio", "4,2,1", "--r", "2", "--method", "trace", "--format", "json"],
    "spectrum_stair3": ["spectrum", "stair:3", "--trials", "20", "--seed", "20261019", "--bins", "17"],
    "moments_stair3": ["moments", "stair:3", "--trials", "20", "--seed", "20261019", "--smax", "4"],
    "moments_table": ["moments", "3,2", "--trials", "10", "--seed", "1", "--format", "table"],
    "check_coxeter": ["check", "coxeter", "5,2,1", "--format", "json"],
    "check_identities": ["check", "identities", "--K", "3", "--eta", "1,0", "--rmax", "3"],
    "check_plancherel": ["check", "plancherel", "--n", "7", "--format", "json"],
}
