#![allow(dead_code)]

pub mod a2_oracle;
