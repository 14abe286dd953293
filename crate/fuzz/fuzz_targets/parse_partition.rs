#![no_main]

use libfuzzer_sys::fuzz_target;
use twocolor::Partition;

fuzz_target!(|data: &[u8]| twocolor_fuzz::text_round_trip::<Partition>(data));
