#![no_main]

use libfuzzer_sys::fuzz_target;
use twocolor::TwoColorPartition;

fuzz_target!(|data: &[u8]| twocolor_fuzz::text_round_trip::<TwoColorPartition>(data));
