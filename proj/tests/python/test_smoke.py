import shiftlim as sl


def test_matrix_arithmetic_and_bigints():
    m = sl.IntMatrix([[10**80, 1], [0, 1]])
    assert m[0, 0] == 10**80
    assert m.to_lists()[0][0] == 10**80
    square = m @ m
    assert square[0, 0] == 10**160
    assert sl.mat_pow(sl.IntMatrix([[2]]), 100)[0, 0] == 2**100
    assert sl.determinant(m) == 10**80


def test_smith_normal_form_postconditions():
    m = sl.IntMatrix([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    u, d, v = sl.smith_normal_form(m)
    assert u @ m @ v == d
    assert sl.is_unimodular(u) and sl.is_unimodular(v)
    assert d[0, 0] == 2  # first invariant factor divides the rest
    assert d[1, 1] % d[0, 0] == 0


def test_direct_limit_dyadic():
    lim = sl.DirectLimitGroup(sl.Endomorphism([[2]]))
    one = sl.LimitElement([1], 0)
    half_of_two = sl.LimitElement([2], 1)
    assert lim.equal(one, half_of_two)
    assert not lim.equal(one, sl.LimitElement([1], 1))
    assert lim.normalize(sl.LimitElement([4], 2)) == sl.LimitElement([1], 0)
    total = lim.add(sl.LimitElement([1], 1), sl.LimitElement([1], 1))
    assert lim.equal(total, one)


def test_planted_search_and_verify():
    a = sl.Endomorphism([[2, 0], [0, 0]])
    b = sl.Endomorphism([[2]])
    cert = sl.search_shift_equivalence(a, b, 2, 3)
    assert cert is not None
    assert cert.lag == 1
    report = sl.verify_cert(a, b, cert)
    assert report.valid
    assert sl.search_shift_equivalence(sl.Endomorphism([[2]]), sl.Endomorphism([[3]]), 4, 10) is None


def test_witness_round_trip():
    a = sl.Endomorphism([[2, 0], [0, 0]])
    b = sl.Endomorphism([[2]])
    cert = sl.search_shift_equivalence(a, b, 2, 3)
    iso = sl.shift_equiv_to_conjugacy(a, b, cert)
    assert sl.verify_limit_iso(iso, 50).ok
    bridged = sl.conjugacy_to_shift_equiv(iso)
    assert sl.verify_cert(a, b, bridged.cert).valid
    assert bridged.cert.lag == bridged.forward_level + bridged.backward_level


def test_invalid_certificate_raises():
    a = sl.Endomorphism([[2]])
    bogus = sl.ShiftEquivCert(sl.IntMatrix([[1]]), sl.IntMatrix([[1]]), 3)
    try:
        sl.conjugacy_from_cert(a, a, bogus)
    except sl.InvalidCertificate:
        pass
    else:
        raise AssertionError("expected InvalidCertificate")


def test_json_round_trip():
    cert = sl.ShiftEquivCert(sl.IntMatrix([[1, 10**60]]), sl.IntMatrix([[2], [0]]), 1)
    text = sl.cert_to_json(cert)
    again = sl.cert_from_json(text)
    assert again == cert
    assert again.phi[0, 1] == 10**60
