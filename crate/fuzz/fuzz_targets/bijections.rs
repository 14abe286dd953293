#![no_main]

use libfuzzer_sys::fuzz_target;
use twocolor::bijections::{eta, eta_inverse, phi, phi_inverse, psi, psi_inverse, theta, theta_inverse};
use twocolor::TwoColorPartition;

// Any parsed two-color partition that a map accepts must come back unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = text.parse::<TwoColorPartition>() else {
        return;
    };
    if p.weight() > 400 {
        return;
    }
    if let Ok(w) = phi(&p) {
        assert_eq!(phi_inverse(&w).unwrap(), p);
        let pair = psi(&w).unwrap();
        assert_eq!(psi_inverse(&pair).unwrap(), w);
    }
    if let Ok(t) = eta(&p) {
        assert_eq!(eta_inverse(&t).unwrap(), p);
    }
    if let Ok(mu) = theta(&p) {
        assert_eq!(theta_inverse(&mu).unwrap(), p);
    }
});
