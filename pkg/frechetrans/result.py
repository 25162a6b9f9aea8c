"""Computation results."""

class Decision(object):
    """Outcome of a translation decision; truthy when a translation works.

    Attributes:
        found (bool): Some translation brings the curves within delta.

        delta (float): Tested threshold.

        witness (Point): Translation of the second curve, None if not found.

        prefix (int): Update-stream prefix whose answer first came out true,
            None if not found or not produced by the update stream.
    """
    found = False
    delta = None
    witness = None
    prefix = None

    def __init__(self, **kwargs):
        for key, val in kwargs.items():
            getattr(self, key)
            setattr(self, key, val)

    def __bool__(self):
        return bool(self.found)

    def __str__(self):
        return 'Decision: found=%s, delta=%s, witness=%s, prefix=%s' \
               % (self.found, self.delta, self.witness, self.prefix)

    def __repr__(self):
        return 'Decision(found=%r, delta=%r, witness=%r, prefix=%r)' \
               % (self.found, self.delta, self.witness, self.prefix)


class TranslationResult(object):
    """Discrete Frechet distance under translation.

    Attributes:
        value (float): The distance delta*.

        witness (Point): Translation of the second curve reaching it.

        prefix (int): Update-stream prefix of the witness.
    """
    value = None
    witness = None
    prefix = None

    def __init__(self, **kwargs):
        for key, val in kwargs.items():
            getattr(self, key)
            setattr(self, key, val)

    def __str__(self):
        return 'TranslationResult: value=%s, witness=%s, prefix=%s' \
               % (self.value, self.witness, self.prefix)

    def __repr__(self):
        return 'TranslationResult(value=%r, witness=%r, prefix=%r)' \
               % (self.value, self.witness, self.prefix)


class ReductionReport(object):
    """End-to-end check of one hardness instance.

    Attributes:
        expected (bool): Brute-force 4-OV answer.

        decided (bool): Translation decision at the instance threshold.

        witness_ok (bool): Distance at the canonical witness translation is
            within the threshold; None for NO instances.

        delta (float): Instance threshold.

        pi_length (int): Length of the first curve.

        sigma_length (int): Length of the second curve.
    """
    expected = None
    decided = None
    witness_ok = None
    delta = None
    pi_length = None
    sigma_length = None

    def __init__(self, **kwargs):
        for key, val in kwargs.items():
            getattr(self, key)
            setattr(self, key, val)

    @property
    def verified(self):
        """bool: Decision matches 4-OV and the witness check passed."""
        return self.expected == self.decided and self.witness_ok is not False

    def __str__(self):
        return 'ReductionReport: expected=%s, decided=%s, witness_ok=%s, '\
               'delta=%s, pi_length=%s, sigma_length=%s' \
               % (self.expected, self.decided, self.witness_ok, self.delta,
                  self.pi_length, self.sigma_length)

    def __repr__(self):
        return 'ReductionReport(expected=%r, decided=%r, witness_ok=%r, '\
               'delta=%r, pi_length=%r, sigma_length=%r)' \
               % (self.expected, self.decided, self.witness_ok, self.delta,
                  self.pi_length, self.sigma_length)


class BenchRecord(object):
    """One timed run of an offline reachability algorithm.

    Attributes:
        algo (str): 'chunked' or 'naive'.

        n (int): Matrix side before padding.

        updates (int): Number of updates U.

        k (int): Chunk size, None for naive.

        time_ns (int): Wall time in nanoseconds.

        checksum (str): Digest of the answer sequence.
    """
    algo = None
    n = None
    updates = None
    k = None
    time_ns = None
    checksum = None

    FIELDS = ('algo', 'n', 'updates', 'k', 'time_ns', 'checksum')

    def __init__(self, **kwargs):
        for key, val in kwargs.items():
            getattr(self, key)
            setattr(self, key, val)

    def __str__(self):
        return 'BenchRecord: algo=%s, n=%s, updates=%s, k=%s, time_ns=%s, '\
               'checksum=%s' \
               % (self.algo, self.n, self.updates, self.k, self.time_ns,
                  self.checksum)

    def __repr__(self):
        return 'BenchRecord(algo=%r, n=%r, updates=%r, k=%r, time_ns=%r, '\
               'checksum=%r)' \
               % (self.algo, self.n, self.updates, self.k, self.time_ns,
                  self.checksum)

    def to_row(self):
        """Returns the record as a CSV row dictionary."""
        row = {field: getattr(self, field) for field in self.FIELDS}
        if row['k'] is None:
            row['k'] = ''
        return row


def parse_bench_rows(rows):
    """Convert CSV row dictionaries to BenchRecord objects.

    Args:
        rows (iterable): Dictionaries keyed by BenchRecord.FIELDS.

    Returns:
        list: BenchRecord objects.
    """
    return [BenchRecord(algo=r['algo'],
                        n=int(r['n']),
                        updates=int(r['updates']),
                        k=int(r['k']) if r['k'] else None,
                        time_ns=int(r['time_ns']),
                        checksum=r['checksum']) for r in rows]
