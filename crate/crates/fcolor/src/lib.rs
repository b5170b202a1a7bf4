// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Files, generators and the command line for `fcolor-core`.

pub mod cli;
pub mod dot;
pub mod families;
pub mod fgr;
pub mod json;

pub use families::{gen_family, FSpec, FamilyError};
pub use fgr::{parse_fgr, serialize_fgr, FgrError};
