// SPDX-License-Identifier: Apache-2.0
//
// Writes reference p-values for the fixed corpus: 100 sequences of 10^6 bits
// taken from the stream SHA-256(label || u64le(i)), i = 0, 1, ...
use nistrs::prelude::*;
use sha2::{Digest, Sha256};
use std::io::Write;

const LABEL: &[u8] = b"iotrng nist corpus v1";
const SEQUENCES: usize = 100;
const SEQ_BYTES: usize = 125_000;

fn corpus() -> Vec<u8> {
    let total = SEQUENCES * SEQ_BYTES;
    let mut out = Vec::with_capacity(total + 32);
    let mut i: u64 = 0;
    while out.len() < total {
        let mut h = Sha256::new();
        h.update(LABEL);
        h.update(i.to_le_bytes());
        out.extend_from_slice(&h.finalize());
        i += 1;
    }
    out.truncate(total);
    out
}

fn emit(w: &mut impl Write, seq: usize, test: &str, values: &[f64]) {
    for (k, p) in values.iter().enumerate() {
        writeln!(w, "{seq} {test} {k} {p:.17e}").unwrap();
    }
}

fn main() {
    let path = std::env::args().nth(1).expect("usage: nist_corpus_oracle <out.txt>");
    let data = corpus();
    let mut w = std::io::BufWriter::new(std::fs::File::create(path).unwrap());
    writeln!(w, "# sequence test index p-value; NA = test not applicable").unwrap();
    for s in 0..SEQUENCES {
        let bits = BitsData::from_binary(data[s * SEQ_BYTES..(s + 1) * SEQ_BYTES].to_vec());
        emit(&mut w, s, "Frequency", &[frequency_test(&bits).1]);
        emit(&mut w, s, "BlockFrequency", &[block_frequency_test(&bits, 128).unwrap().1]);
        let c = cumulative_sums_test(&bits);
        emit(&mut w, s, "CumulativeSums", &[c[0].1, c[1].1]);
        emit(&mut w, s, "Runs", &[runs_test(&bits).1]);
        emit(&mut w, s, "LongestRun", &[longest_run_of_ones_test(&bits).unwrap().1]);
        emit(&mut w, s, "Rank", &[rank_test(&bits).unwrap().1]);
        emit(&mut w, s, "FFT", &[fft_test(&bits).1]);
        let t: Vec<f64> = non_overlapping_template_test(&bits, 9).unwrap().iter().map(|r| r.1).collect();
        emit(&mut w, s, "NonOverlappingTemplate", &t);
        emit(&mut w, s, "OverlappingTemplate", &[overlapping_template_test(&bits, 9).1]);
        emit(&mut w, s, "Universal", &[universal_test(&bits).1]);
        emit(&mut w, s, "ApproximateEntropy", &[approximate_entropy_test(&bits, 10).1]);
        match random_excursions_test(&bits) {
            Ok(r) => emit(&mut w, s, "RandomExcursions", &r.iter().map(|x| x.1).collect::<Vec<_>>()),
            Err(_) => writeln!(w, "{s} RandomExcursions NA").unwrap(),
        }
        match random_excursions_variant_test(&bits) {
            Ok(r) => emit(&mut w, s, "RandomExcursionsVariant", &r.iter().map(|x| x.1).collect::<Vec<_>>()),
            Err(_) => writeln!(w, "{s} RandomExcursionsVariant NA").unwrap(),
        }
        let sr = serial_test(&bits, 16);
        emit(&mut w, s, "Serial", &[sr[0].1, sr[1].1]);
        emit(&mut w, s, "LinearComplexity", &[linear_complexity_test(&bits, 500).1]);
        eprintln!("sequence {s} done");
    }
}
